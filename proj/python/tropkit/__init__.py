"""Tropical (min-plus) algebra and the cryptographic schemes built on it.

The heavy lifting lives in the compiled extension ``tropkit._core``; this
package re-exports its public surface.
"""

from tropkit._core import (  # noqa: F401
    EPS,
    AutChain,
    AutKeygenParams,
    AutPublicKey,
    CnfFormula,
    FpMatrix,
    KexParams,
    KexTranscript,
    TropMatrix,
    TropPoly,
    TropRat,
    UniPoly,
    aut_apply_point,
    aut_apply_point_inverse,
    aut_apply_poly,
    aut_compose,
    aut_decrypt,
    aut_encrypt,
    aut_keygen,
    aut_preset_paper,
    aut_preset_toy,
    classical_attack,
    classical_run,
    kex_finish,
    kex_keyspace_log10,
    kex_offer,
    kex_preset_paper,
    kex_preset_toy,
    kex_run_demo,
    kex_setup,
    lift_assignment,
    m_add,
    m_is_invertible,
    m_mul,
    m_pow,
    m_scalar_mul,
    parse_dimacs,
    poly_add,
    poly_eval,
    poly_eval_matrix,
    poly_mul,
    private_key_from_json,
    private_key_to_json,
    project_assignment,
    public_key_from_json,
    public_key_to_json,
    rat_add,
    rat_equiv,
    rat_eval,
    rat_mul,
    rat_substitute,
    reduce_to_tropical,
    solve_sat_brute,
    solve_tropical_brute,
    t_add,
    t_div,
    t_mul,
    t_pow,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
