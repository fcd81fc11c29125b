"""Exact-arithmetic calculator for closed smooth 4-manifold descriptors.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: catalog blocks, the surgery calculus, admissibility and
obstruction verdicts, witness enumeration, the lemma auditor and the
geography scans.
"""

from fourfold._core import (  # noqa: F401
    Descriptor,
    FourfoldError,
    blow_up,
    build_lattice_family,
    check_bf,
    classify_homeo,
    connected_sum,
    cp2,
    cp2bar,
    curvature_bounds,
    find_witnesses,
    geography_scan,
    geography_status,
    gompf,
    homotopy_k3,
    ht_report,
    irreducible_z,
    irreducible_zp,
    k3,
    kappa_constant,
    lemma_check,
    lemma_formula_ids,
    minimal_sc,
    monopole_family,
    pi2_interval,
    pq_sign,
    pq_to_decimal,
    primary_kodaira,
    property_check,
    ricci_flow_obstruction,
    s1xs3,
    surface_product,
    torus_surgery,
    yp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
