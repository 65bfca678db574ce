"""Base partitions, cover partitions and Durfee sizes of skew characters
and of outer and Schubert products, with an exhaustive Littlewood-Richardson
oracle to check them against."""

from .basecover import (
    base_product,
    base_skew,
    cover_product,
    cover_skew,
    durfee_schubert,
    product_shape,
    union_partition,
)
from .errors import (
    ConstraintViolated,
    EmptyDecomposition,
    EmptyShape,
    FactorOutsideRectangle,
    InnerNotContained,
    InstanceTooLarge,
    OverlappingBlocks,
    ParseError,
    ShapeDoesNotFit,
    SkewCharError,
)
from .lr import (
    Decomposition,
    LRTableau,
    base_of,
    cover_of,
    decompose,
    durfee_of,
    is_lattice,
    lr_coefficient,
    lr_tableaux,
    outer_product,
    schubert_product,
)
from .partition import (
    Partition,
    Rectangle,
    complement_in_rectangle,
    conjugate,
    contains,
    durfee,
    intersect,
    parse_partition,
    format_partition,
    rectangle_decomposition,
    union,
)
from .skew import (
    RectanglePlacement,
    SkewShape,
    conjugate_skew,
    decay,
    disjoint_union,
    format_skew,
    make_skew,
    max_rectangle_placements,
    parse_skew,
    render,
    rho,
    rotate,
    row_lengths_partition,
)

__version__ = "0.1.0"
