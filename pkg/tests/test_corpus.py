from collections import Counter

from tnforms import corpus
from tnforms.lorentzian import is_normally_stable, lorentzian_chain
from tnforms.toeplitz import (build, is_totally_nonnegative,
                              is_totally_positive, sperner_number)


def test_generation_is_deterministic():
    spec = corpus.CorpusSpec()
    first = corpus.serialize_corpus(corpus.generate(spec))
    second = corpus.serialize_corpus(corpus.generate(spec))
    assert first == second
    other_seed = corpus.serialize_corpus(
        corpus.generate(corpus.CorpusSpec(seed=99)))
    assert other_seed != first


def test_family_subset_and_degree_selection():
    spec = corpus.CorpusSpec(degrees=(4,), families=(corpus.FAMILY_MONOMIAL,))
    forms = corpus.generate(spec)
    assert forms
    assert {f.family for f in forms} == {corpus.FAMILY_MONOMIAL}
    assert {f.form.degree for f in forms} == {4}


def test_corpus_size_and_families():
    forms = corpus.generate(corpus.CorpusSpec())
    assert len(forms) >= 100
    families = Counter(f.family for f in forms)
    assert set(families) == set(corpus.ALL_FAMILIES)


def test_every_hint_is_verified():
    for item in corpus.generate(corpus.CorpusSpec()):
        form = item.form
        d = form.degree
        top = d // 2
        hints = item.hints
        if hints.get("tp_all_i"):
            for i in range(top + 1):
                assert is_totally_positive(build(form, i)), item.name
        if hints.get("tn_all_i"):
            for i in range(top + 1):
                assert is_totally_nonnegative(build(form, i)).ok, item.name
        if "lorentzian_at_least" in hints:
            for i in range(hints["lorentzian_at_least"] + 1):
                assert is_totally_nonnegative(build(form, i)).ok, item.name
        if "normally_stable" in hints:
            assert is_normally_stable(form) == hints["normally_stable"], \
                item.name
        if "sperner" in hints:
            assert sperner_number(form) == hints["sperner"], item.name
        if "max_lorentzian_index" in hints:
            report = lorentzian_chain(form)
            assert report.max_lorentzian_index == \
                hints["max_lorentzian_index"], item.name
