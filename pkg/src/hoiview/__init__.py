"""hoiview: pairwise and higher-order interaction views of recordings.

Converts multichannel time series into two connectivity views using the
matrix-based Renyi alpha-order entropy functional on Gaussian-kernel
Gram matrices:

* a C x C nonlinear mutual-information matrix (pairwise interactions),
* a C x C x C O-information tensor (triple interactions; positive =
  redundancy-dominated, negative = synergy-dominated),

plus a Pearson-correlation baseline, Gaussian closed-form oracles for
validation, and bit-stable CSV/binary serialization.

Typical use::

    from hoiview import KernelParams, load_csv, standardize, build_cache
    from hoiview import pairwise_view, oinfo_tensor

    rec = standardize(load_csv("subject.csv"))
    cache = build_cache(rec, KernelParams(sigma=5.0, alpha=1.01))
    mi = pairwise_view(cache)
    o = oinfo_tensor(cache)
"""

from .entropy import (
    EigCounter,
    KernelParams,
    eig_counter,
    entropy,
    gram,
    joint_entropy,
    joint_gram,
)
from .errors import (
    DegenerateChannel,
    EmptyInput,
    FormatError,
    HoiViewError,
    NumericalError,
    ParseError,
    ShapeError,
    SingularCovariance,
    TooFewChannels,
    TooFewSamples,
)
from .formats import (
    read_matrix_csv,
    read_sidecar,
    read_tensor,
    write_matrix_csv,
    write_sidecar,
    write_tensor,
)
from .ingest import (
    DatasetManifest,
    ManifestEntry,
    Recording,
    load_csv,
    load_manifest,
    standardize,
)
from .interactions import (
    EntropyCache,
    TcDtcBreakdown,
    build_cache,
    mutual_information,
    oinfo_tensor,
    pairwise_view,
    pearson_view,
    triplet_o_information,
)
from .oracles import (
    GaussianSystem,
    entropy_alpha2,
    gaussian_entropy,
    gaussian_oinfo,
    mutual_information_nocache,
    oinfo_coinformation,
    oinfo_nocache,
    pairwise_view_nocache,
    sample_gaussian,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # kernel entropy
    "KernelParams", "gram", "entropy", "joint_gram", "joint_entropy",
    "EigCounter", "eig_counter",
    # ingest
    "Recording", "DatasetManifest", "ManifestEntry",
    "load_csv", "load_manifest", "standardize",
    # interactions
    "EntropyCache", "TcDtcBreakdown", "build_cache", "mutual_information",
    "pairwise_view", "triplet_o_information", "oinfo_tensor", "pearson_view",
    # oracles
    "GaussianSystem", "gaussian_entropy", "gaussian_oinfo", "sample_gaussian",
    "entropy_alpha2", "mutual_information_nocache", "pairwise_view_nocache",
    "oinfo_nocache", "oinfo_coinformation",
    # formats
    "write_tensor", "read_tensor", "write_matrix_csv", "read_matrix_csv",
    "write_sidecar", "read_sidecar",
    # errors
    "HoiViewError", "ParseError", "EmptyInput", "DegenerateChannel",
    "TooFewSamples", "TooFewChannels", "ShapeError", "NumericalError",
    "SingularCovariance", "FormatError",
]
