from importlib.metadata import version, PackageNotFoundError

from ._polynomial import Polynomial, poly_gcd
from ._rational_function import RationalFunction, ratfun_arith, valuation
from ._factored import FactoredElement, factor
from ._matrix import DimensionError, RatFunMatrix, SingularMatrixError
from ._difference_ring import DifferenceRing, PrimeClassRep, RingCase
from ._tropical import TropicalMatrix, tropical_mul, val_matrix
from ._ladder import MatrixLadder, m_ladder
from ._local_bound import (
    ExponentFunction,
    LocalBound,
    exponent_function,
    improve,
    initial_window,
    local_bound,
)
from ._cw_bound import (
    ComponentLocalBound,
    MatrixExponentFunction,
    assemble_component_bounds,
    cw_local,
    matrix_exponent_function,
)
from ._bound_engine import (
    BoundKind,
    Caveat,
    ContentBound,
    RecurrenceSystem,
    VerificationReport,
    Violation,
    cw_bound,
    from_transformed_solution,
    global_bound,
    to_transformed_solution,
    transform_system,
    verify_bound,
)
from ._system_builders import (
    eigenring_system,
    random_system_with_solutions,
    system_from_fundamental_matrix,
)
from ._system_file import (
    ParserError,
    SystemFile,
    format_expression,
    format_system,
    parse_expression,
    read_solutions_file,
    read_system_file,
)
from ._settings import BoundSettings, load_settings
from ._bench import BenchRecord, run_bench

try:
    __version__ = version("recurrence-bounds")
except PackageNotFoundError:
    # package is not installed
    pass
