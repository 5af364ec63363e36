# ualp/core.py
import asyncio
from typing import Any, Awaitable, Callable, List, Mapping, Optional, Sequence, Union

from .identities import identity_from_name, parse_grid_entry, verify_point
from .ualp_types import IdentityName, IdentityParams, QuadratureSpec, VerificationRecord
from .util import debug_print

StatusCallback = Callable[[int, VerificationRecord], Awaitable[None]]

DEFAULT_WORKERS = 4


class VerificationRunner:
    """
    Runs an identity over a parameter grid, one worker thread per point, and
    returns the records in grid order.
    """
    def __init__(self, spec: Optional[QuadratureSpec] = None, abs_tol: float = 1e-7, rel_tol: float = 1e-7,
                 max_workers: int = DEFAULT_WORKERS, debug: bool = False):
        if max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {max_workers}")
        self.spec = spec or QuadratureSpec()
        self.abs_tol = abs_tol
        self.rel_tol = rel_tol
        self.max_workers = max_workers
        self.debug = debug

    async def run_grid(self, identity_name: Union[str, IdentityName],
                       parameter_grid: Sequence[Union[Mapping[str, Any], IdentityParams]],
                       status_callback: Optional[StatusCallback] = None) -> List[VerificationRecord]:
        """
        Verify every grid point. Unknown identities and malformed entries
        raise before any point runs; errors inside a point become failed records.
        """
        identity = identity_from_name(identity_name)
        points = [parse_grid_entry(identity, entry) for entry in parameter_grid]
        debug_print(self.debug, f"verifying {identity.value} over {len(points)} points with {self.max_workers} workers")
        semaphore = asyncio.Semaphore(self.max_workers)

        async def run_point(index: int, params: IdentityParams) -> VerificationRecord:
            async with semaphore:
                record = await asyncio.to_thread(
                    verify_point, identity, params, self.spec, self.abs_tol, self.rel_tol
                )
            debug_print(self.debug, f"point {index}: {record.parameters} passed={record.passed}")
            if status_callback:
                await status_callback(index, record)
            return record

        # gather keeps input order whatever the completion order
        return list(await asyncio.gather(*(run_point(index, params) for index, params in enumerate(points))))


def verify_identity_grid(identity_name: Union[str, IdentityName],
                         parameter_grid: Sequence[Union[Mapping[str, Any], IdentityParams]],
                         spec: Optional[QuadratureSpec] = None, abs_tol: float = 1e-7, rel_tol: float = 1e-7,
                         max_workers: int = DEFAULT_WORKERS, debug: bool = False) -> List[VerificationRecord]:
    """Synchronous entry point: one record per grid point, in grid order."""
    runner = VerificationRunner(spec, abs_tol, rel_tol, max_workers=max_workers, debug=debug)
    return asyncio.run(runner.run_grid(identity_name, parameter_grid))
