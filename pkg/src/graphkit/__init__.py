"""Graph algorithms written against iterators and data accessors.

Algorithms never touch a concrete graph.  They move iterators over a
backend (:class:`AdjListGraph`, :class:`CompactGraph`,
:class:`ImplicitCompleteGraph`, or a view such as
:class:`ContractedGraph`) and read or write attributes through data
accessors, so the same code runs over every backend and every attribute
storage.
"""

from __future__ import annotations

from .accessors import (EDGE, NODE, BoundsDecorator, CalcAccessor, ComputedAccessor,
                        ConstantAccessor, DataAccessor, FieldAccessor, HandlerAccessor,
                        ObjectAccessor, edge_array, index_distance_length, node_array)
from .algorithms import (AlgorithmObject, BreadthFirstSearch, DepthFirstSearch, DfsStep, Dijkstra,
                         DijkstraPhase, PredecessorRecorder, SccPhase, SimpleDepthFirstSearch,
                         StronglyConnectedComponents, TopologicalSort, Tracer, bfs_order, dfs_order,
                         shortest_distances, strong_components, topological_order)
from .contraction import (ContractedGraph, CycleContractor, EdgeCIt, InAdjCIt, ListCoordinator,
                          NodeCIt, NPathContractor, OutAdjCIt, PairCoordinator, TwoPathContractor)
from .errors import (CapabilityError, CyclicInputError, GraphKitError, InputError, InvariantError,
                     UsageError)
from .generate import generate_random, random_dag
from .iterators import EdgeIt, InAdjIt, NodeIt, OutAdjIt
from .kernel import AdjListGraph, CompactGraph, GraphKernel, ImplicitCompleteGraph, compact_from
from .matching import (Matching, MaximumMatching, augment, brute_force_max_matching, max_matching,
                       symmetric_graph)
from .safe import EscapeMode, SafeEdgeIt, SafeGraph, SafeInAdjIt, SafeNodeIt, SafeOutAdjIt
from .wrappers import FilterIterator, ObserverIterator, SingleAttributeAdapter, StepCounter

__version__ = "0.1.0"
