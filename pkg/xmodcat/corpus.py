"""
A named registry of crossed-module builders, used by the command line to resolve bundled names and by the tests as
the reference corpus.
"""
from __future__ import annotations

import typing
from collections import OrderedDict

from xmodcat.crossed_module import CrossedModule, crossed_module, drinfeld_double, trivial_crossed_module
from xmodcat.exceptions import CorpusError, CorpusNotFoundError
from xmodcat.group_core import cyclic_group, symmetric_group, trivial_group, trivial_action
from xmodcat.utils import maybe_decorator

Builder = typing.Callable[[], CrossedModule]

_CORPUS: OrderedDict[str, tuple[Builder, dict]] = OrderedDict()
_BUILT: dict[str, CrossedModule] = {}


def register(
    builder: Builder,
    name: str = None,
    conflict_strategy: typing.Literal["replace", "keep_existing", "error"] = "error",
    **kwargs,
) -> Builder:
    """
    Arguments:
        builder (Callable[[], CrossedModule]): Zero-argument function building the crossed module.
        name (str): The name to register under (default: the builder's ``__name__``).
        conflict_strategy ("replace" | "keep_existing" | "error"): Handle the case that a different builder is
            already registered under the same name:

                - "keep_existing": Ignore the incoming register request
                - "replace": Unregister the existing builder first
                - "error": raises CorpusError

        kwargs: Metadata stored alongside the builder.
    Raises:
        CorpusError: If the name is taken and conflict_strategy is "error".
    Returns:
        Callable[[], CrossedModule]: The registered builder, or the existing one for "keep_existing".
    """
    name = name or builder.__name__
    if name in _CORPUS and _CORPUS[name][0] is not builder:
        if conflict_strategy == "keep_existing":
            return _CORPUS[name][0]
        elif conflict_strategy == "replace":
            unregister(name)
        else:
            raise CorpusError(f"Corpus member {name} already registered.")

    _CORPUS[name] = (builder, kwargs)
    _BUILT.pop(name, None)
    return builder


def unregister(
    name: str, conflict_strategy: typing.Literal["ignore", "error"] = "error"
) -> typing.Optional[Builder]:
    """
    Raises:
        CorpusNotFoundError: If the name is not registered and conflict_strategy is "error".
    """
    if name not in _CORPUS:
        if conflict_strategy == "ignore":
            return None
        raise CorpusNotFoundError(name)
    _BUILT.pop(name, None)
    return _CORPUS.pop(name)[0]


def get_registered(name: str) -> Builder:
    """
    Raises:
        CorpusNotFoundError: If no builder is registered under the name.
    """
    if name not in _CORPUS:
        raise CorpusNotFoundError(name)
    return _CORPUS[name][0]


def get_metadata(name: str) -> dict:
    if name not in _CORPUS:
        raise CorpusNotFoundError(name)
    return dict(_CORPUS[name][1])


def get_registered_members() -> OrderedDict[str, Builder]:
    """
    Returns:
        OrderedDict[str, Callable[[], CrossedModule]]: Name to builder, in registration order.
    """
    return OrderedDict((name, builder) for name, (builder, _) in _CORPUS.items())


def lookup(name: str) -> CrossedModule:
    """
    Builds (once) and returns the named crossed module. Repeated lookups return the same instance so cached
    computations on it are shared.
    """
    if name not in _BUILT:
        _BUILT[name] = get_registered(name)()
    return _BUILT[name]


@maybe_decorator
def corpus_member(builder: Builder = None, name: str = None, **kwargs) -> Builder:
    """Registers the decorated builder, usable bare or as ``@corpus_member(name=...)``."""
    return register(builder, name=name, **kwargs)


# ------------------------------------------
# Members
# ------------------------------------------
@corpus_member(name="trivial", bijective=True)
def _trivial() -> CrossedModule:
    return trivial_crossed_module()


@corpus_member(name="d_z2", bijective=True)
def _d_z2() -> CrossedModule:
    return drinfeld_double(cyclic_group(2), name="d_z2")


@corpus_member(name="d_z3", bijective=True)
def _d_z3() -> CrossedModule:
    return drinfeld_double(cyclic_group(3), name="d_z3")


@corpus_member(name="d_z4", bijective=True)
def _d_z4() -> CrossedModule:
    return drinfeld_double(cyclic_group(4), name="d_z4")


@corpus_member(name="d_s3", bijective=True)
def _d_s3() -> CrossedModule:
    return drinfeld_double(symmetric_group(3), name="d_s3")


@corpus_member(name="x4_double_cover", bijective=False)
def _x4_double_cover() -> CrossedModule:
    z4 = cyclic_group(4)
    return crossed_module(z4, z4, trivial_action(z4, 4), [0, 2, 0, 2], name="x4_double_cover")


@corpus_member(name="trivial_boundary_z2", bijective=False)
def _trivial_boundary_z2() -> CrossedModule:
    e = trivial_group()
    return crossed_module(e, cyclic_group(2), trivial_action(e, 2), [0, 0], name="trivial_boundary_z2")


@corpus_member(name="trivial_boundary_z2_z2", bijective=False)
def _trivial_boundary_z2_z2() -> CrossedModule:
    z2 = cyclic_group(2)
    return crossed_module(z2, cyclic_group(2), trivial_action(z2, 2), [0, 0], name="trivial_boundary_z2_z2")


@corpus_member(name="z3_inversion", bijective=False)
def _z3_inversion() -> CrossedModule:
    return crossed_module(cyclic_group(2), cyclic_group(3), [[0, 1, 2], [0, 2, 1]], [0, 0, 0], name="z3_inversion")
