"""Cyclic stabiliser codes of length dividing p^t + 1: construction,
verification, decoding, and the good-length density survey."""

from .galois import FieldElem, FieldSpec, SubfieldEmbedding, primitive_nth_root
from .polyring import (
    Poly,
    crt_combine,
    cyclic_mul,
    cyclotomic_cosets,
    factorize_xn_minus_1,
    inverse_mod,
    poly_gcd,
    reciprocal_transform,
)
from .codegen import (
    BchWindow,
    ConstructionError,
    FrobeniusCode,
    IncompatibleParams,
    LengthClass,
    bch_distance,
    classify_length,
    code_params,
    construct_code,
    enumerate_canonical,
    from_descriptor,
    from_labels,
    linear_exists,
    linear_generator,
)
from .stab import (
    IsotropicSpace,
    SympPair,
    centraliser_min_weight,
    centraliser_sweep,
    centraliser_weight_sample,
    joint_weight,
    pairwise_isotropy,
    symp_inner,
    verify_code,
)
from .decode import (
    DecodeFailure,
    Syndrome,
    bch_decode,
    correct,
    decode_simulation,
    random_error,
    reduce_syndrome,
    split_error,
    syndrome_oracle,
)
from .survey import (
    Checkpoint,
    DensityReport,
    density,
    density_csv,
    is_good_length,
    minimal_exponent,
    qr_lower_bound_check,
    thread_budget,
)
from .tables import TABLES, TableRow, diff_table, golden_table, render_table, table_codes

__version__ = "0.1.0"

__all__ = [
    "BchWindow",
    "Checkpoint",
    "ConstructionError",
    "DecodeFailure",
    "DensityReport",
    "FieldElem",
    "FieldSpec",
    "FrobeniusCode",
    "IncompatibleParams",
    "IsotropicSpace",
    "LengthClass",
    "Poly",
    "SubfieldEmbedding",
    "SympPair",
    "Syndrome",
    "TABLES",
    "TableRow",
    "bch_decode",
    "bch_distance",
    "centraliser_min_weight",
    "centraliser_sweep",
    "centraliser_weight_sample",
    "classify_length",
    "code_params",
    "construct_code",
    "correct",
    "crt_combine",
    "cyclic_mul",
    "cyclotomic_cosets",
    "decode_simulation",
    "density",
    "density_csv",
    "diff_table",
    "enumerate_canonical",
    "factorize_xn_minus_1",
    "from_descriptor",
    "from_labels",
    "golden_table",
    "inverse_mod",
    "is_good_length",
    "joint_weight",
    "linear_exists",
    "linear_generator",
    "minimal_exponent",
    "pairwise_isotropy",
    "poly_gcd",
    "primitive_nth_root",
    "qr_lower_bound_check",
    "random_error",
    "reciprocal_transform",
    "reduce_syndrome",
    "render_table",
    "split_error",
    "symp_inner",
    "syndrome_oracle",
    "table_codes",
    "thread_budget",
    "verify_code",
]
