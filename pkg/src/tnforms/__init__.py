"""Exact combinatorial machinery for bivariate forms and their band matrices:
total positivity tests, Schur expansions of minors, weighted lattice-path
Hessian determinants, and Lorentzian-type classification."""

from .core import (ContractError, InconclusiveError, PropertyViolation,
                   Rational, SparsePolynomial, determinant_exact,
                   determinant_polynomial, order_at_zero)
from .forms import (BivariateForm, apply_operator, apply_x, apply_y,
                    first_nonzero_index, from_coefficient_factors,
                    from_factors, perturb, substitute_linear)
from .toeplitz import (ToeplitzMatrix, build, is_strongly_totally_nonnegative,
                       is_totally_nonnegative, is_totally_positive, is_tp_k,
                       minor, rank, sperner_number)
from .tableaux import (Partition, SkewShape, Tableau, enumerate_lr_tableaux,
                       enumerate_ssyt, is_reverse_lattice_word, lr_coefficient,
                       row_word)
from .schur import complete_homogeneous, jacobi_trudi_eval, schur_eval
from .minor_expansion import (alpha_statistic, column_set_from_partition,
                              expand_minor, indices_from_partition,
                              leading_term_check, shape_from_indices)
from .hessian import (enumerate_path_systems, m_polynomial,
                      mixed_hessian_permuted, path_minor, plucker_determinant,
                      specialize_path_minor)
from .lorentzian import (is_i_lorentzian, is_normally_stable, lorentzian_chain,
                         satisfies_mixed_hrr)
from .corpus import CorpusSpec, generate

__version__ = "0.1.0"
