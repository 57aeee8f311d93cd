"""degenet: degeneracy-based robustness metrics for multi-modal networks.

Models communication networks, element inventories, algorithm portfolios and
protocol-layer stacks, and scores how much functional degeneracy (structurally
different components able to do the same job) each exhibits: DWPR/DWPR* over
paths, FSS/FSS* over substitutable elements, ARQ/ARQ* over algorithms,
MLDI/MLDI* over layers, plus a failure-injection harness relating degeneracy
to robustness under component loss.
"""

from ._version import __version__
from .algorithm_metrics import ArqReport, arq, arq_report, arq_star, performance_kernel
from .errors import (
    DegenetError,
    DimensionMismatchError,
    DocumentError,
    InputError,
    PathLimitError,
    SupportViolationError,
    UndefinedMetricError,
    UnknownIdError,
)
from .harness import (
    METRIC_NAMES,
    FailureStep,
    Scenario,
    ScenarioInputs,
    ScenarioReport,
    StepReport,
    emit_report,
    parse_report,
    parse_scenario,
    report_rows,
    run_scenario,
)
from .kernels import (
    DistanceKind,
    Distribution,
    cosine_structural_dissimilarity,
    gaussian_kernel,
    jaccard_dissimilarity,
    jsd,
    kl_divergence,
    shannon_entropy,
    vector_distance,
)
from .layer_metrics import (
    MldiReport,
    conditional_layer_entropy,
    degenerate_subset,
    layer_entropy,
    layer_function_distribution,
    mldi,
    mldi_report,
    mldi_star,
)
from .model import (
    AlgorithmProfile,
    Edge,
    Element,
    Inventory,
    Layer,
    LayerElement,
    LayerStack,
    MetricConfig,
    Network,
    Portfolio,
    capability,
    canonical_edge_key,
    emit_document,
    parse_document,
    remove_failures,
    to_document,
)
from .path_metrics import (
    DwprReport,
    degeneracy_score,
    dwpr,
    dwpr_report,
    dwpr_star,
    mode_entropy,
    path_mode_dissimilarity,
    pooled_mode_distribution,
)
from .paths import (
    DEFAULT_MAX_HOPS,
    Path,
    PathEnumeration,
    ValidPathSet,
    enumerate_all,
    enumerate_simple_paths,
    filter_qos,
    path_distribution,
    path_quality,
)
from .substitution_metrics import (
    FssReport,
    capable_set,
    fss,
    fss_report,
    fss_star,
    substitution_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
