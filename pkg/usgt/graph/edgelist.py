"""
Edge-list codec

The text format is line oriented:

    # comment lines start with '#'
    N <count>
    <u> <v>
    ...

The first non-comment line declares the number of vertices, every
following non-comment line is an edge given by two 0-based vertex
indices separated by whitespace. Blank lines are ignored.

"""

import io as _io
import re as _re

from .base import Graph

_DECIMAL = _re.compile(r"[0-9]+")


class EdgeListError(ValueError):
    """
    Raised on malformed edge-list text

    """
    pass


class EdgeListCodec(object):
    """
    Edge-list decoder/encoder

    Attributes
    ----------
    _reader: file-like, None
        The stream to decode from
    _writer: file-like, None
        The stream to encode to

    """

    format = "edgelist"
    description = "Plain text edge-list graph decoder/encoder"

    def __init__(self, rstream=None, wstream=None):

        super().__init__()
        self._reader = rstream
        self._writer = wstream

    def decode(self):
        """
        Decodes a graph

        Returns
        -------
        tuple
            A 2-tuple (graph, comments) where comments is the list of
            comment lines with the leading '#' and spaces removed

        Raises
        ------
        EdgeListError
            If the text is malformed or the edges are invalid

        """
        self._check_stream("read")

        comments = []
        n = None
        edges = []
        for lineno, raw in enumerate(self._reader, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                comments.append(line[1:].strip())
                continue
            fields = line.split()
            if n is None:
                if len(fields) != 2 or fields[0] != "N":
                    raise EdgeListError(
                        "line {}: expected 'N <count>', got {!r}"
                        .format(lineno, line))
                n = self._parse_int(fields[1], lineno)
                continue
            if len(fields) != 2:
                raise EdgeListError("line {}: expected '<u> <v>', got {!r}"
                                    .format(lineno, line))
            edges.append((self._parse_int(fields[0], lineno),
                          self._parse_int(fields[1], lineno)))

        if n is None:
            raise EdgeListError("missing 'N <count>' line")
        try:
            graph = Graph(n, edges)
        except ValueError as exc:
            raise EdgeListError(str(exc))
        return graph, comments

    def encode(self, graph, header=()):
        """
        Encodes a graph

        Parameters
        ----------
        graph: Graph
        header: iterable[str]
            Comment lines written before the data, without the '#'

        Returns
        -------
        None

        """
        self._check_stream("write")

        w = self._writer
        for line in header:
            w.write("# {}\n".format(line))
        w.write("N {}\n".format(graph.n_vertices))
        for u, v in graph.edges:
            w.write("{} {}\n".format(u, v))

    @staticmethod
    def _parse_int(token, lineno):
        # Plain ASCII decimal only: no sign, no underscores
        if _DECIMAL.fullmatch(token) is None:
            raise EdgeListError("line {}: invalid non-negative integer {!r}"
                                .format(lineno, token))
        return int(token)

    def _check_stream(self, mode):

        if mode == "read":
            if self._reader is None:
                raise RuntimeError("Codec not set in read mode")
        elif mode == "write":
            if self._writer is None:
                raise RuntimeError("Codec not set in write mode")
        else:
            raise RuntimeError("Bug")


def read_edge_list(path):
    """
    Reads a graph from an edge-list file

    Parameters
    ----------
    path: str

    Returns
    -------
    Graph

    """
    with open(path, "r", encoding="ascii") as f:
        graph, _ = EdgeListCodec(rstream=f).decode()
    return graph


def parse_edge_list(text):
    """Decodes a graph from edge-list text, returning (graph, comments)"""
    return EdgeListCodec(rstream=_io.StringIO(text)).decode()


def format_edge_list(graph, header=()):
    """Encodes a graph as edge-list text"""
    buf = _io.StringIO()
    EdgeListCodec(wstream=buf).encode(graph, header)
    return buf.getvalue()


def write_edge_list(graph, path, header=()):
    """Writes a graph to an edge-list file"""
    with open(path, "w", encoding="ascii", newline="\n") as f:
        EdgeListCodec(wstream=f).encode(graph, header)
