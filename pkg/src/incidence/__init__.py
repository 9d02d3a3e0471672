from src.incidence.classification import (
    CLASS_IDS,
    PUBLISHED_CLASSES,
    ClassRecord,
    class_representative,
    classify_order6,
    verify_classification,
)
from src.incidence.isomorphism import (
    AutomorphismGroup,
    IsoCertificate,
    automorphism_group,
    is_isomorphic,
)
from src.incidence.structure import (
    IncidenceStructure,
    Labeling,
    Multinet,
    check_multinet,
    dual_3net,
    line_length,
    multinet_with_superline,
    well_index,
)

__all__ = [
    "CLASS_IDS",
    "PUBLISHED_CLASSES",
    "AutomorphismGroup",
    "ClassRecord",
    "IncidenceStructure",
    "IsoCertificate",
    "Labeling",
    "Multinet",
    "automorphism_group",
    "check_multinet",
    "class_representative",
    "classify_order6",
    "dual_3net",
    "is_isomorphic",
    "line_length",
    "multinet_with_superline",
    "verify_classification",
    "well_index",
]
