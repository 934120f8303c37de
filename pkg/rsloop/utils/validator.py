"""Base class for input validation
Copyright (c) 2021-2026 RadiaSoft LLC. All rights reserved
"""
import math
from pykern.pkcollections import PKDict


class ValidatorBase:
    """
    Base class for drive parameter sets, time grids and scenarios.
    Used for input validation against ``_DEFAULTS``; failures raise ``_INPUT_ERROR``.
    """

    def _get_params(self, params):
        if params is None:
            return self._DEFAULTS.copy()
        if isinstance(params, dict) and not isinstance(params, PKDict):
            params = PKDict(params)
        self._validate_type(params, PKDict, "params")
        p = params.copy()
        for k in self._DEFAULTS:
            if k not in p:
                p[k] = self._DEFAULTS[k]
        return p

    def _validate_params(self, input_params):
        for p in input_params:
            if p not in self._DEFAULTS:
                raise self._INPUT_ERROR(
                    f"invalid inputs: {p} is not a parameter to {self.__class__.__name__}"
                )

    def _validate_type(self, input, target_type, params_name):
        if not isinstance(input, target_type):
            raise self._INPUT_ERROR(
                f"invalid input type: {self.__class__.__name__} takes {params_name} as type:{target_type.__name__}"
            )

    def _validate_real(self, value, name, nonnegative=False):
        try:
            v = float(value)
        except (TypeError, ValueError):
            raise self._INPUT_ERROR(f"{name}={value!r} is not a real number")
        if not math.isfinite(v):
            raise self._INPUT_ERROR(f"{name}={value!r} is not finite")
        if nonnegative and v < 0.0:
            raise self._INPUT_ERROR(f"{name}={v} is negative")
        return v
