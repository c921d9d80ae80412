import argparse
import logging
import os

from ..models import ForbiddenFamily
from ..utils.constructions import build, gallery_listing
from ..utils.io_utils import serialize_hg, write_graph


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="Build a named construction")
    parser.add_argument("name", nargs="?", help='Gallery name, e.g. "F5", "K:5,3" or "C3_3"')
    parser.add_argument("params", nargs="*", type=int, help="Parameters of the construction")
    parser.add_argument("--list", action="store_true", dest="list_gallery",
                        help="List the gallery with parameter ranges")
    parser.add_argument("--out", default=None, help="Write the .hg (or .json) file here")
    parser.set_defaults(handler=construct_command)


def construct_command(args: argparse.Namespace) -> int:
    """Build a gallery construction and print or save it.

    Families write one file per member, suffixed with the member index.

    Args:
        args (argparse.Namespace): Parsed `construct` arguments.

    Returns:
        int: Exit status.
    """
    if args.list_gallery:
        print("\n".join(gallery_listing()))
        return 0
    if not args.name:
        raise ValueError("construct needs a NAME or --list")
    name = args.name
    if args.params:
        name = f"{name}:{','.join(str(p) for p in args.params)}"
    built = build(name)
    graphs = built.members if isinstance(built, ForbiddenFamily) else [built]
    for index, graph in enumerate(graphs):
        comment = name if len(graphs) == 1 else f"{name} member {index}"
        if args.out is None:
            print(serialize_hg(graph, comment=comment), end="")
            continue
        path = args.out
        if len(graphs) > 1:
            stem, extension = os.path.splitext(args.out)
            path = f"{stem}_{index}{extension}"
        write_graph(graph, path, comment=comment)
        logging.info("Wrote %s to %s", graph, path)
    return 0
