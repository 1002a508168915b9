"""Run configuration: flat key = value files with CLI-flag overrides."""

from dataclasses import dataclass, field, fields


@dataclass
class RunConfig:
    t_min: float = 0.0
    t_max: float = 210.0
    step: float = 0.01
    err_budget: float = 1e-8
    poly_source: str = "fit"       # "fit" or a path to a coefficient file
    fit_lo: float = 10.0
    fit_hi: float = 200.0
    x_policy: str = "fixed"        # "fixed" or "t65" (X = T^(6/5))
    x_fixed: float = 200.0
    xi: float = 0.5
    sigmas: tuple = (1.0,)
    k_sigmas: tuple = (7.0 / 6.0,)
    t_list: tuple = (10.0, 20.0, 40.0, 80.0)
    scan_t0: float = 50.0
    spectral_path: str = ""        # empty = bundled sample
    outdir: str = "out"
    threads: int = 1

    def truncation_x(self, T_max):
        if self.x_policy == "t65":
            return float(T_max) ** 1.2
        return self.x_fixed

    def echo(self):
        """Sorted key = value lines for provenance headers.

        Execution details that cannot affect the numbers (worker count,
        output directory) are omitted so reruns stay byte-identical.
        """
        out = []
        for f in fields(self):
            if f.name in ("threads", "outdir"):
                continue
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                v = ",".join(format(x, ".17g") if isinstance(x, float)
                             else str(x) for x in v)
            out.append(f"{f.name} = {v}")
        return sorted(out)


_FLOAT_KEYS = {"t_min", "t_max", "step", "err_budget", "fit_lo", "fit_hi",
               "x_fixed", "xi", "scan_t0"}
_INT_KEYS = {"threads"}
_TUPLE_KEYS = {"sigmas", "k_sigmas", "t_list"}


def _coerce(key, value):
    if key in _FLOAT_KEYS:
        return float(value)
    if key in _INT_KEYS:
        return int(value)
    if key in _TUPLE_KEYS:
        return tuple(float(v) for v in str(value).split(",") if v.strip())
    return value


def load_config(path=None, overrides=None):
    """Build a RunConfig from an optional file plus override pairs."""
    cfg = RunConfig()
    valid = {f.name for f in fields(RunConfig)}
    items = []
    if path:
        with open(path, encoding="utf-8") as f:
            for lineno, raw in enumerate(f, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key = value")
                k, v = (p.strip() for p in line.split("=", 1))
                items.append((k, v))
    items.extend(overrides or [])
    for k, v in items:
        if k not in valid:
            raise ValueError(f"unknown config key {k!r}")
        setattr(cfg, k, _coerce(k, v))
    return cfg
