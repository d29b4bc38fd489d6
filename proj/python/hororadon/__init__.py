from ._core import (
    AccuracyError,
    DivergentIntegral,
    DomainError,
    FunctionOnY,
    GroupElement,
    InvalidArgument,
    UnsupportedFamily,
    __version__,
    cartan,
    fourier_radon_identity,
    group_radon,
    identity,
    in_Gh,
    iwasawa,
    parse_family,
    radon,
    radon_grid,
    rotation,
    run_suite,
    suite_names,
    unipotent,
)
