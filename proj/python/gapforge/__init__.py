"""Label Cover gap reductions: instances in, instances and exact optima out.

Instances are plain dicts in the repository's JSON layout.
"""

import json

from . import _core
from ._core import NativeError, sha256_hex

__all__ = [
    "GapforgeError",
    "fixture",
    "fixture_names",
    "lc_to_ssat",
    "ssat_to_sis",
    "sis_to_ncp",
    "sis_to_lhp",
    "solve_lc",
    "solve_ssat",
    "solve_sis",
    "solve_ncp",
    "solve_lhp",
    "run_chain",
    "gen_lc",
    "frustrate",
    "sha256_hex",
    "cli",
]


class GapforgeError(Exception):
    """Raised for every library error; `code` names the failure."""

    def __init__(self, code, detail):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


def _call(fn, *args, **kwargs):
    try:
        return json.loads(fn(*args, **kwargs))
    except NativeError as e:
        code, detail = e.args
        raise GapforgeError(code, detail) from None
    except ValueError as e:
        # nlohmann parse errors surface as ValueError
        raise GapforgeError("SchemaViolation", str(e)) from None


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def fixture(name):
    return _call(_core.fixture, name)


def fixture_names():
    return list(_core.fixture_names())


def lc_to_ssat(lc):
    return _call(_core.lc_to_ssat, _text(lc))


def ssat_to_sis(ssat):
    return _call(_core.ssat_to_sis, _text(ssat))


def sis_to_ncp(sis, g, d_rep=None, q=None):
    return _call(_core.sis_to_ncp, _text(sis), g, d_rep, q)


def sis_to_lhp(sis, u=None, g=1):
    return _call(_core.sis_to_lhp, _text(sis), u, g)


def solve_lc(lc):
    return _call(_core.solve_lc, _text(lc))


def solve_ssat(ssat, box=2, mode="l1"):
    return _call(_core.solve_ssat, _text(ssat), box, mode)


def solve_sis(sis, box=2):
    return _call(_core.solve_sis, _text(sis), box)


def solve_ncp(ncp, box=1, full_field=True):
    return _call(_core.solve_ncp, _text(ncp), box, full_field)


def solve_lhp(lhp):
    """Minimum violations over the {-1,0,1} grid with y = 1 and symbolic delta."""
    return _call(_core.solve_lhp, _text(lhp))


def run_chain(lc, g=1, box=2, run_oracles=True):
    return _call(_core.run_chain, _text(lc), g, box, run_oracles)


def gen_lc(num_a, num_b, d_b, sigma_a=2, sigma_b=2, p=1, planted=True, seed=0):
    return _call(_core.gen_lc, num_a, num_b, d_b, sigma_a, sigma_b, p, planted, seed)


def frustrate(lc, flips, seed):
    return _call(_core.frustrate, _text(lc), flips, seed)


def cli(*args):
    """Run the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])
