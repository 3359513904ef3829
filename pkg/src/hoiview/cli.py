"""Batch command line: compute and serialize views, inspect tensors.

    hoiview views --input rec.csv --views pearson,mi,oinfo --out outdir
    hoiview views --manifest manifest.json --views mi --out outdir
    hoiview inspect outdir/subj.oinfo.hoi1 3 10 57 [--recompute --input rec.csv]

Exit codes: 0 full success, 1 any per-recording failure (remaining
recordings are still processed), 2 configuration error.
"""

import argparse
import os
import sys
import time

from . import __version__
from .entropy import KernelParams, eig_counter
from .errors import HoiViewError
from .formats import (
    read_tensor,
    write_matrix_csv,
    write_sidecar,
    write_tensor,
)
from .ingest import (
    ORIENTATIONS,
    ROWS_ARE_CHANNELS,
    Recording,
    load_csv,
    load_manifest,
    standardize,
)
from .interactions import build_cache, oinfo_tensor, pairwise_view, pearson_view, triplet_o_information

VIEW_NAMES = ("pearson", "mi", "oinfo")


class ConfigError(Exception):
    pass


def _default_threads():
    env = os.environ.get("HOI_THREADS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ConfigError(f"HOI_THREADS must be an integer, got {env!r}") from None
        if value < 1:
            raise ConfigError(f"HOI_THREADS must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


def _parse_views(text):
    views = [v.strip() for v in text.split(",") if v.strip()]
    if not views:
        raise ConfigError("--views must name at least one of pearson, mi, oinfo")
    for v in views:
        if v not in VIEW_NAMES:
            raise ConfigError(f"unknown view {v!r}; choose from {', '.join(VIEW_NAMES)}")
    # dedupe, preserve canonical order
    return [v for v in VIEW_NAMES if v in views]


def _kernel_params(args):
    try:
        return KernelParams(sigma=args.sigma, alpha=args.alpha)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _gather_inputs(args):
    if (args.input is None) == (args.manifest is None):
        raise ConfigError("give exactly one of --input or --manifest")
    if args.input is not None:
        return [(args.input, None)]
    try:
        manifest = load_manifest(args.manifest)
    except (OSError, HoiViewError) as exc:
        raise ConfigError(f"cannot read manifest {args.manifest}: {exc}") from exc
    base = os.path.dirname(os.path.abspath(args.manifest))
    items = []
    for entry in manifest.entries:
        path = entry.path
        if not os.path.isabs(path):
            path = os.path.join(base, path)
        items.append((path, entry.subject_id))
    return items


def _process_recording(path, subject_id, views, params, threads, out_dir, orientation):
    rec = load_csv(path, orientation=orientation, subject_id=subject_id)
    rec = standardize(rec)
    subject = rec.subject_id
    start = time.perf_counter()
    eig_start = eig_counter.value
    cache = None
    if "mi" in views or "oinfo" in views:
        cache = build_cache(rec, params, threads=threads)
    for view in views:
        if view == "pearson":
            matrix = pearson_view(rec)
            out = os.path.join(out_dir, f"{subject}.pearson.csv")
            write_matrix_csv(out, matrix)
            sidecar = os.path.join(out_dir, f"{subject}.pearson.json")
        elif view == "mi":
            matrix = pairwise_view(cache)
            out = os.path.join(out_dir, f"{subject}.mi.csv")
            write_matrix_csv(out, matrix)
            sidecar = os.path.join(out_dir, f"{subject}.mi.json")
        else:
            tensor = oinfo_tensor(cache, threads=threads)
            out = os.path.join(out_dir, f"{subject}.oinfo.hoi1")
            write_tensor(out, tensor)
            sidecar = os.path.join(out_dir, f"{subject}.oinfo.json")
        write_sidecar(sidecar, subject, view, params.sigma, params.alpha, __version__)
    elapsed = time.perf_counter() - start
    eigs = eig_counter.value - eig_start
    print(
        f"[hoiview] {subject}: views={','.join(views)} "
        f"time={elapsed:.2f}s eigendecompositions={eigs}",
        file=sys.stderr,
    )


def cmd_views(args):
    views = _parse_views(args.views)
    params = _kernel_params(args)
    threads = args.threads if args.threads is not None else _default_threads()
    if threads < 1:
        raise ConfigError(f"--threads must be >= 1, got {threads}")
    if args.orientation not in ORIENTATIONS:
        raise ConfigError(f"--orientation must be one of {ORIENTATIONS}")
    items = _gather_inputs(args)
    try:
        os.makedirs(args.out, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {args.out}: {exc}") from exc
    failures = 0
    for path, subject_id in items:
        try:
            _process_recording(
                path, subject_id, views, params, threads, args.out, args.orientation
            )
        except (HoiViewError, OSError, ValueError) as exc:
            failures += 1
            label = subject_id if subject_id is not None else path
            print(f"[hoiview] ERROR {label}: {exc}", file=sys.stderr)
    return 1 if failures else 0


def cmd_inspect(args):
    tensor = read_tensor(args.tensor)
    C = tensor.shape[0]
    i, j, k = args.i, args.j, args.k
    for idx in (i, j, k):
        if not (0 <= idx < C):
            raise ConfigError(f"index {idx} out of range for C={C}")
    stored = tensor[i, j, k]
    if len({i, j, k}) != 3:
        print(f"o[{i},{j},{k}] = {stored:.17g}  (degenerate cell: repeated index, "
              f"stored as the neutral sentinel 0)")
        return 0
    print(f"o[{i},{j},{k}] = {stored:.17g}")
    if args.recompute:
        if args.input is None:
            raise ConfigError("--recompute needs --input with the source recording")
        params = _kernel_params(args)
        rec = standardize(load_csv(args.input, orientation=args.orientation))
        if rec.channels != C:
            raise ConfigError(
                f"recording has {rec.channels} channels but tensor has C={C}"
            )
        sub_rec = Recording(data=rec.data[sorted((i, j, k))], subject_id=rec.subject_id)
        cache = build_cache(sub_rec, params, threads=1)
        b = triplet_o_information(cache, 0, 1, 2)
        print(f"recomputed: tc = {b.tc:.17g}")
        print(f"recomputed: dtc = {b.dtc:.17g}")
        print(f"recomputed: o = {b.o:.17g}")
        print(f"recomputed: H(i,j,k) = {b.triple_joint:.17g}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hoiview",
        description="Pairwise mutual-information and triple O-information "
                    "views of multichannel recordings.",
    )
    parser.add_argument("--version", action="version", version=f"hoiview {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    views = sub.add_parser("views", help="compute and write views for recordings")
    views.add_argument("--input", help="one recording CSV")
    views.add_argument("--manifest", help="JSON manifest of recordings")
    views.add_argument("--views", default="pearson,mi,oinfo",
                       help="comma list from: pearson, mi, oinfo")
    views.add_argument("--sigma", type=float, default=5.0, help="Gaussian kernel width")
    views.add_argument("--alpha", type=float, default=1.01, help="Renyi entropy order")
    views.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: HOI_THREADS or all cores)")
    views.add_argument("--orientation", default=ROWS_ARE_CHANNELS, choices=ORIENTATIONS)
    views.add_argument("--out", required=True, help="output directory")
    views.set_defaults(func=cmd_views)

    inspect = sub.add_parser("inspect", help="read one cell of a tensor file")
    inspect.add_argument("tensor", help="HOI1 tensor file")
    inspect.add_argument("i", type=int)
    inspect.add_argument("j", type=int)
    inspect.add_argument("k", type=int)
    inspect.add_argument("--recompute", action="store_true",
                         help="recompute tc/dtc/o from the source recording")
    inspect.add_argument("--input", help="source recording CSV (for --recompute)")
    inspect.add_argument("--sigma", type=float, default=5.0)
    inspect.add_argument("--alpha", type=float, default=1.01)
    inspect.add_argument("--orientation", default=ROWS_ARE_CHANNELS, choices=ORIENTATIONS)
    inspect.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"[hoiview] config error: {exc}", file=sys.stderr)
        return 2
    except (HoiViewError, OSError) as exc:
        print(f"[hoiview] error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
