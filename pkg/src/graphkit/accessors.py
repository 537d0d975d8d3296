"""Data accessors: uniform get/set of item attributes through iterators.

An algorithm never touches attribute storage directly.  It calls
``da.get(it)`` / ``da.set(it, value)`` where ``it`` is an iterator, and the
accessor decides where the value lives.  An object accessor picks which
facet of the iterator (its node or its edge) the attribute belongs to.
"""

from __future__ import annotations

import math
from collections.abc import Callable, MutableMapping
from operator import attrgetter
from typing import Any

from .errors import CapabilityError


class ObjectAccessor:
    """Selects the node or the edge of an iterator."""

    __slots__ = ("facet",)

    def __init__(self, facet: str):
        if facet not in ("node", "edge"):
            raise ValueError("facet must be 'node' or 'edge'")
        self.facet = facet

    def get_object(self, it: Any) -> Any:
        return it.node if self.facet == "node" else it.edge

    def __repr__(self) -> str:
        return self.facet.upper()


NODE = ObjectAccessor("node")
EDGE = ObjectAccessor("edge")


class DataAccessor:
    """Base class.  Subclasses provide ``get`` and, when writable, ``set``."""

    writable = False

    def get(self, it: Any) -> Any:
        raise NotImplementedError

    def set(self, it: Any, value: Any) -> None:
        raise CapabilityError(f"{type(self).__name__} is read-only")

    def __call__(self, it: Any) -> Any:
        return self.get(it)


class HandlerAccessor(DataAccessor):
    """Reads and writes ``handler[oa.get_object(it)]``.

    The handler is any mapping-like store: a list indexed by integer
    handles, a dict, or an object implementing ``__getitem__``/``__setitem__``.
    """

    writable = True

    def __new__(cls, handler: Any, oa: ObjectAccessor = NODE):
        if cls is HandlerAccessor:
            if oa is NODE:
                cls = _NodeHandlerAccessor
            elif oa is EDGE:
                cls = _EdgeHandlerAccessor
        return object.__new__(cls)

    def __init__(self, handler: Any, oa: ObjectAccessor = NODE):
        self.handler = handler
        self.oa = oa

    def get(self, it: Any) -> Any:
        return self.handler[self.oa.get_object(it)]

    def set(self, it: Any, value: Any) -> None:
        self.handler[self.oa.get_object(it)] = value


class _NodeHandlerAccessor(HandlerAccessor):
    def get(self, it):
        return self.handler[it.node]

    def set(self, it, value):
        self.handler[it.node] = value


class _EdgeHandlerAccessor(HandlerAccessor):
    def get(self, it):
        return self.handler[it.edge]

    def set(self, it, value):
        self.handler[it.edge] = value


class FieldAccessor(DataAccessor):
    """Reads and writes one attribute of the record attached to an item.

    ``records`` maps item handles to record objects; the accessor touches
    ``records[item].<field>``.
    """

    writable = True

    def __init__(self, records: Any, field: str, oa: ObjectAccessor = NODE):
        self.records = records
        self.field = field
        self.oa = oa
        self._getter = attrgetter(field)

    def get(self, it: Any) -> Any:
        return self._getter(self.records[self.oa.get_object(it)])

    def set(self, it: Any, value: Any) -> None:
        setattr(self.records[self.oa.get_object(it)], self.field, value)


class ComputedAccessor(DataAccessor):
    """Value computed from the selected item by ``compute(item)``.

    Read-only unless ``setter(item, value)`` is supplied.
    """

    def __new__(cls, compute: Callable[[Any], Any], oa: ObjectAccessor = NODE,
                setter: Callable[[Any, Any], None] | None = None):
        if cls is ComputedAccessor:
            if oa is NODE:
                cls = _NodeComputedAccessor
            elif oa is EDGE:
                cls = _EdgeComputedAccessor
        return object.__new__(cls)

    def __init__(self, compute: Callable[[Any], Any], oa: ObjectAccessor = NODE,
                 setter: Callable[[Any, Any], None] | None = None):
        self.compute = compute
        self.oa = oa
        self.setter = setter
        self.writable = setter is not None

    def get(self, it: Any) -> Any:
        return self.compute(self.oa.get_object(it))

    def set(self, it: Any, value: Any) -> None:
        if self.setter is None:
            raise CapabilityError("computed accessor without a setter is read-only")
        self.setter(self.oa.get_object(it), value)


class _NodeComputedAccessor(ComputedAccessor):
    def get(self, it):
        return self.compute(it.node)


class _EdgeComputedAccessor(ComputedAccessor):
    def get(self, it):
        return self.compute(it.edge)


class ConstantAccessor(DataAccessor):
    """Always yields the same value."""

    def __init__(self, value: Any):
        self.value = value

    def get(self, it: Any) -> Any:
        return self.value


class CalcAccessor(DataAccessor):
    """Combines two accessors: ``calc(s.get(it), t.get(it))``.

    Typically ``s`` reads a value of the fixed (source) node and ``t`` a
    value of the node across the edge, giving an edge attribute that is
    never stored.
    """

    def __init__(self, s: DataAccessor, t: DataAccessor, calc: Callable[[Any, Any], Any]):
        self.s = s
        self.t = t
        self.calc = calc
        sget, tget = s.get, t.get
        self.get = lambda it: calc(sget(it), tget(it))


class BoundsDecorator(DataAccessor):
    """Forwards to a wrapped accessor and carries the bottom and top values of its domain.

    Algorithms use ``value_null`` as "zero" and ``value_max`` as
    "unreached" without assuming a numeric type.
    """

    def __init__(self, da: DataAccessor, value_null: Any = 0, value_max: Any = math.inf):
        self.da = da
        self.value_null = value_null
        self.value_max = value_max
        self.writable = da.writable
        # bind straight through: no extra call layer on the hot path
        self.get = da.get
        self.set = da.set


def node_store(graph: Any, init: Any = None) -> MutableMapping | list:
    """A container for one value per node, pre-filled with *init*.

    A list when the graph uses small integer node handles, else a dict.
    """
    bound = graph.node_id_bound()
    if bound is not None:
        return [init] * bound
    return {v: init for v in graph.nodes()}


def edge_store(graph: Any, init: Any = None) -> MutableMapping | list:
    """Like :func:`node_store` for edges."""
    bound = graph.edge_id_bound()
    if bound is not None:
        return [init] * bound
    return {e: init for e in graph.edges()}


def node_array(graph: Any, init: Any = None) -> HandlerAccessor:
    """A writable node accessor backed by a fresh :func:`node_store`."""
    return HandlerAccessor(node_store(graph, init), NODE)


def edge_array(graph: Any, init: Any = None) -> HandlerAccessor:
    return HandlerAccessor(edge_store(graph, init), EDGE)


def index_distance_length(graph: Any) -> CalcAccessor:
    """Edge length ``|s - t|`` for graphs whose nodes are integer indices.

    Works on any adjacency iterator: the source value is the fixed node,
    the target value the node across the current edge.
    """
    source_index = ComputedAccessor(lambda v: v, NODE)
    target_index = ComputedAccessor(graph.target, EDGE)
    return CalcAccessor(source_index, target_index, lambda s, t: abs(s - t))
