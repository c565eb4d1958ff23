"""Exact Clifford algebra kernels over dyadic rational arithmetic.

Two product engines share one algebra:

* a blade engine for any real signature Cl(k, l), where basis blades are
  bitmasks and the product sign is counted exactly;
* a fast engine for the neutral signatures Cl(m, m), where the algebra
  is laid out as a full matrix of signed basis words and the product
  reduces to row/column bookkeeping plus an O(m) sign scan.

A dense product costs 16^m coefficient pairs in the blade engine but
only 8^m triples in the fast one, a factor of exactly 2^m.

The classification half of the package names the matrix algebra of any
Cl(k, l) from three mod-8 residues, and can run the other way, turning
measured squares of canonical elements back into bits of the signature.
"""

from .bits import (bit, bit_to_sign, half_pochhammer_sign, lucas_sign,
                   neg_mod8, sign_bit, sign_to_bit)
from .blades import (Metric, MetricError, Multivector, ParseError,
                     blade_product, center_check, dual_automorphism_check,
                     grade_involution, mv_mul, omega_squared_oracle,
                     omega_tau_squared_oracle, tau_blade, tau_squared_oracle,
                     volume_element)
from .classify import (AlgebraClass, AutomorphismBits, SignatureKL,
                       algebra_name, classification_record, classify,
                       cube_coordinates, cube_record, division_algebra,
                       omega_squared, omega_tau_squared, recover_n_bits,
                       recover_signature_partial, render_cube, tau_squared,
                       varlamov_bits)
from .dyadic import DyadicRational
from .efb import (ChiralityRecord, EFBElement, EFBIndex, EFBMultivector,
                  blades_to_efb, efb_element, efb_product, efb_to_blades,
                  matrix_unit_normalization, normal_order, normalization_sign,
                  omega_eigen_check, sig_label, sign_s, signatures,
                  table_entries, witt_basis, word_multivector,
                  word_product_oracle)
from .instrument import OpCounts, op_counters, reset_op_counters
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass", "AutomorphismBits", "ChiralityRecord", "CheckResult",
    "DyadicRational", "EFBElement", "EFBIndex", "EFBMultivector", "Metric",
    "MetricError", "Multivector", "OpCounts", "ParseError", "SignatureKL",
    "algebra_name", "bit", "bit_to_sign", "blade_product", "blades_to_efb",
    "center_check", "classification_record", "classify", "cube_coordinates",
    "cube_record", "division_algebra", "dual_automorphism_check",
    "efb_element", "efb_product", "efb_to_blades", "grade_involution",
    "half_pochhammer_sign", "lucas_sign", "matrix_unit_normalization",
    "mv_mul", "neg_mod8", "normal_order", "normalization_sign",
    "omega_eigen_check", "omega_squared", "omega_squared_oracle",
    "omega_tau_squared", "omega_tau_squared_oracle", "op_counters",
    "recover_n_bits", "recover_signature_partial", "render_cube",
    "reset_op_counters", "run_suite", "sig_label", "sign_bit", "sign_s",
    "sign_to_bit", "signatures", "table_entries", "tau_blade", "tau_squared",
    "tau_squared_oracle", "varlamov_bits", "volume_element", "witt_basis",
    "word_multivector", "word_product_oracle",
]
