"""
One handler per scenario kind. A handler decodes its payload, runs the
computation and returns plain Python values; the runner encodes them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import catalog
from cohomology import (
    GLattice,
    class_order,
    fixed_sublattice,
    generates_same_classes,
    h1,
    half_gram_quotient,
    is_coboundary,
    is_cocycle,
)
from fibration import (
    AbGroupModel,
    BlockEndo,
    GroupElement,
    Graph,
    Horizontal,
    SectionExpr,
    TrivialFibration,
    ZeroSection,
    coboundary_check,
    cocycle_check,
    h1_structured,
    is_numerical_section,
    mw_sum_rational_elliptic,
    section_line_bundle,
)
from lattice import (
    Embedding,
    Lattice,
    basis_extension,
    build_K3,
    check_isometric,
    extend_by_minus_one,
    fixes_vector,
    hyperbolic_square,
    is_primitive,
    orthogonal_complement,
)
from scenario.codec import (
    decode_int,
    decode_int_matrix,
    decode_int_vector,
    decode_rat_vector,
    require_shape,
)
from scenario.model import ScenarioKind
from surfaces import (
    Irreducibility,
    OrderDescriptor,
    RamifiedDivisor,
    SurfaceModel,
    classify_order,
    effectivity,
    genus,
    h0_hirzebruch,
    h0_hirzebruch2,
    is_numerically_trivial,
    maximality_check,
    nakai_certificate,
    overlap_applicable,
    ramification_transfer,
    recognize_quotient,
    restriction_class,
    restriction_profile,
    surface_hirzebruch,
    surface_p2,
    surface_quadric,
    surface_rational_elliptic,
    surface_ruled_elliptic,
)
from toolkit.errors import AmbiguousZeroPairingError, SchemaError, SquareTooNegativeError
from toolkit.linalg import IntMatrix, signature

RESTRICTION_NOTE = (
    "restriction class sums the d terms sigma^0 L .. sigma^(d-1) L; "
    "a reading with d + 1 factors would give a different class"
)
TWIST_NOTE = "twist classes are checked in the section group only; their image in H^1(G, Pic Y) is not computed"


@dataclass(frozen=True)
class Outcome:
    computed: dict[str, Any]
    assumptions: tuple[str, ...] = field(default=())


Handler = Callable[[dict[str, Any]], Outcome]

HANDLERS: dict[ScenarioKind, Handler] = {}


def handles(kind: ScenarioKind) -> Callable[[Handler], Handler]:
    def register(func: Handler) -> Handler:
        HANDLERS[kind] = func
        return func

    return register


# Payload helpers

def _get(payload: dict[str, Any], key: str) -> Any:
    if key not in payload:
        raise SchemaError(f"Payload is missing {key!r}.")
    return payload[key]


def _ref(value: Any, where: str) -> tuple[str, dict[str, Any]]:
    if not isinstance(value, dict) or "ref" not in value:
        raise SchemaError(f"{where}: expected {{'ref': ...}}, got {value!r}.")
    params = {k: v for k, v in value.items() if k != "ref"}
    return value["ref"], params


def _params_int(params: dict[str, Any], key: str) -> int:
    if key not in params:
        raise SchemaError(f"Reference is missing parameter {key!r}.")
    return decode_int(params[key], key)


def _case(payload: dict[str, Any]) -> catalog.GeometricCase | None:
    if "case" not in payload:
        return None
    name, params = _ref(payload["case"], "case")
    if name == "sextic":
        return catalog.sextic(_params_int(params, "n"))
    if name in catalog.CASES:
        return catalog.case(name)
    raise SchemaError(f"Unknown case reference {name!r}.")


def _target(payload: dict[str, Any]) -> Lattice:
    value = payload.get("target", "k3")
    if value == "k3":
        return build_K3()
    if value == "hh":
        return hyperbolic_square()
    return Lattice(decode_int_matrix(value, "target"))


def _embedding_and_action(payload: dict[str, Any], need_action: bool) -> tuple[Embedding, IntMatrix | None]:
    if "case" in payload and _ref(payload["case"], "case")[0] == "witness":
        embedding, action = catalog.nonintegral_witness()
    elif "case" in payload:
        case = _case(payload)
        embedding, action = case.embedding, case.action
    else:
        embedding, action = None, None
    if embedding is not None:
        if "action" in payload:
            action = decode_int_matrix(payload["action"], "action")
        return embedding, action

    target = _target(payload)
    images = decode_int_matrix(_get(payload, "matrix"), "matrix")
    if images.rows != target.rank:
        raise SchemaError(f"matrix: expected {target.rank} rows, got {images.rows}.")
    if "source_gram" in payload:
        source = Lattice(decode_int_matrix(payload["source_gram"], "source_gram"))
        require_shape(source.gram, (images.cols, images.cols), "source_gram")
        embedding = Embedding(source, target, images)
    else:
        embedding = Embedding.from_images(target, images)
    action = None
    if need_action or "action" in payload:
        action = decode_int_matrix(_get(payload, "action"), "action")
    return embedding, action


def _glattice(payload: dict[str, Any]) -> GLattice:
    case = _case(payload)
    if case is not None:
        return case.glattice
    if "module" in payload:
        name, params = _ref(payload["module"], "module")
        if name != "trivial":
            raise SchemaError(f"Unknown module reference {name!r}.")
        return catalog.restriction_module(_params_int(params, "n"))
    sigma = decode_int_matrix(_get(payload, "sigma"), "sigma")
    order = decode_int(_get(payload, "order"), "order")
    if "gram" not in payload:
        return GLattice.from_module(sigma, order)
    gram = decode_int_matrix(payload["gram"], "gram")
    require_shape(sigma, gram.shape, "sigma")
    return GLattice(Lattice(gram), sigma, order)


def _lattice(payload: dict[str, Any]) -> tuple[Lattice, catalog.GeometricCase | None]:
    case = _case(payload)
    if case is not None:
        return case.pic, case
    return Lattice(decode_int_matrix(_get(payload, "gram"), "gram")), None


def _surface(value: Any) -> SurfaceModel:
    name, params = _ref(value, "surface")
    if name == "p2":
        return surface_p2()
    if name == "quadric":
        return surface_quadric()
    if name == "hirzebruch":
        return surface_hirzebruch(_params_int(params, "n"))
    if name == "ruled-elliptic":
        return surface_ruled_elliptic(_params_int(params, "deg"))
    if name == "rational-elliptic":
        return surface_rational_elliptic()
    raise SchemaError(f"Unknown surface reference {name!r}.")


def _order(payload: dict[str, Any]) -> OrderDescriptor:
    if "order" in payload:
        name, params = _ref(payload["order"], "order")
        if name in catalog.ORDERS:
            return catalog.ORDERS[name]()
        if name == "ruled-elliptic":
            return catalog.ruled_elliptic_order(decode_int_vector(_get(params, "vector"), "vector"))
        if name == "bielliptic":
            _, vector = catalog.bielliptic(_params_int(params, "type"))
            return catalog.ruled_elliptic_order(vector)
        raise SchemaError(f"Unknown order reference {name!r}.")

    surface = _surface(_get(payload, "surface"))
    ramification = []
    for i, entry in enumerate(payload.get("ramification", [])):
        where = f"ramification[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object.")
        ramification.append(RamifiedDivisor(
            decode_rat_vector(_get(entry, "class"), f"{where}.class", surface.rank),
            decode_int(_get(entry, "e"), f"{where}.e"),
            Irreducibility(entry.get("irreducible", "unknown")),
        ))
    return OrderDescriptor(surface, tuple(ramification), decode_int(payload.get("cover_degree", 1), "cover_degree"))


def _fibration(payload: dict[str, Any]) -> BlockEndo:
    value = _get(payload, "fibration")
    if isinstance(value, dict) and "ref" in value:
        name, params = _ref(value, "fibration")
        if name == "trivial":
            return catalog.trivial_fibration(_params_int(params, "n"))
        if name == "bielliptic":
            n, _ = catalog.bielliptic(_params_int(params, "type"))
            return catalog.trivial_fibration(n)
        if name in catalog.FIBRATIONS:
            return catalog.FIBRATIONS[name]()
        raise SchemaError(f"Unknown fibration reference {name!r}.")

    model_value = _get(value, "model")
    model = AbGroupModel(
        decode_int(model_value.get("free_rank", 0), "free_rank"),
        decode_int_vector(model_value.get("finite_cyclic", []), "finite_cyclic"),
        decode_int(model_value.get("elliptic_count", 0), "elliptic_count"),
    )
    order = decode_int(_get(value, "order"), "order")
    kwargs: dict[str, Any] = {}
    if "free_action" in value:
        kwargs["free_action"] = decode_int_matrix(value["free_action"], "free_action")
    if "finite_units" in value:
        kwargs["finite_units"] = decode_int_vector(value["finite_units"], "finite_units")
    elliptic = value.get("elliptic_action")
    if isinstance(elliptic, list):
        return BlockEndo.elliptic_from_matrix(model, order, decode_int_matrix(elliptic, "elliptic_action"), **kwargs)
    if isinstance(elliptic, dict):
        kwargs["elliptic_signs"] = decode_int_vector(elliptic.get("signs", []), "signs")
        kwargs["elliptic_permutation"] = decode_int_vector(elliptic.get("permutation", []), "permutation")
    return BlockEndo(model, order, **kwargs)


def _element(value: Any, model: AbGroupModel) -> GroupElement:
    if not isinstance(value, dict):
        raise SchemaError(f"element: expected an object, got {value!r}.")
    elliptic = value.get("elliptic", [])
    points = [decode_rat_vector(p, f"elliptic[{i}]", 2) for i, p in enumerate(elliptic)]
    element = GroupElement.of(
        decode_int_vector(value.get("free", [0] * model.free_rank), "free"),
        decode_int_vector(value.get("finite", [0] * len(model.finite_cyclic)), "finite"),
        points or [(0, 0)] * model.elliptic_count,
    )
    return element.check(model)


def _encode_element(s: GroupElement) -> dict[str, Any]:
    return {"free": list(s.free), "finite": list(s.finite), "elliptic": [list(p) for p in s.elliptic]}


def _section_symbol(value: Any):
    if not isinstance(value, dict):
        raise SchemaError(f"section: expected an object, got {value!r}.")
    if value.get("zero"):
        return ZeroSection()
    if "horizontal" in value:
        return Horizontal(str(value["horizontal"]))
    if "graph" in value:
        degree = decode_int(value.get("degree", 1), "degree")
        return Graph(str(value["graph"]), degree, tuple(str(c) for c in _get(value, "preimages")))
    if "vertical" in value:
        raise SchemaError(f"section: the fibre over {value['vertical']!r} is a divisor, not a section.")
    raise SchemaError(f"section: unknown symbol {value!r}.")


# Handlers

@handles(ScenarioKind.SIGNATURE)
def run_signature(payload: dict[str, Any]) -> Outcome:
    lattice, _ = _lattice(payload)
    sig = signature(lattice.gram)
    return Outcome({
        "rank": lattice.rank,
        "signature": [sig.positive, sig.negative, sig.zero],
        "det": lattice.det(),
        "even": lattice.is_even(),
    })


@handles(ScenarioKind.EMBEDDING_CHECK)
def run_embedding_check(payload: dict[str, Any]) -> Outcome:
    embedding, _ = _embedding_and_action(payload, need_action=False)
    isometric = check_isometric(embedding)
    computed: dict[str, Any] = {"isometric": isometric, "rank": embedding.rank}
    if isometric:
        sig = embedding.source.signature()
        complement = orthogonal_complement(embedding)
        computed.update({
            "primitive": is_primitive(embedding),
            "primitive_by_extension": basis_extension(embedding.matrix) is not None,
            "source_signature": [sig.positive, sig.negative, sig.zero],
            "complement_rank": complement.complement.rank,
            "pic_plus_t_det": complement.pic_plus_t_det,
            "torsion_quotient": complement.pic_plus_t_det != 0,
        })
    return Outcome(computed)


@handles(ScenarioKind.ISOMETRY_EXTEND)
def run_isometry_extend(payload: dict[str, Any]) -> Outcome:
    embedding, action = _embedding_and_action(payload, need_action=True)
    require_shape(action, (embedding.rank, embedding.rank), "action")
    result = extend_by_minus_one(embedding.target, embedding, action)
    computed: dict[str, Any] = {
        "integral": result.integral,
        "orthogonal": result.orthogonal,
        "involutive": result.involutive,
        "phi": result.phi_integer if result.integral else result.phi,
    }
    if "fixed_vectors" in payload:
        computed["fixes"] = [
            fixes_vector(result, decode_int_vector(v, "fixed_vectors", embedding.rank), embedding)
            for v in payload["fixed_vectors"]
        ]
    return Outcome(computed, result.assumptions)


def _named_class(gl: GLattice, v) -> dict[str, Any]:
    cocycle = is_cocycle(gl, v)
    return {
        "vector": list(v),
        "cocycle": cocycle,
        "coboundary": is_coboundary(gl, v),
        "class_order": class_order(gl, v) if cocycle else None,
    }


@handles(ScenarioKind.H1)
def run_h1(payload: dict[str, Any]) -> Outcome:
    gl = _glattice(payload)
    result = h1(gl)
    computed: dict[str, Any] = {
        "invariant_factors": list(result.invariant_factors),
        "free_rank": result.free_rank,
        "order": result.order,
        "generators": [list(g) for g in result.generators],
    }
    if "named_classes" in payload:
        named = [decode_int_vector(v, "named_classes", gl.rank) for v in payload["named_classes"]]
        computed["named_classes"] = [_named_class(gl, v) for v in named]
        computed["named_classes_generate"] = generates_same_classes(gl, named, result.generators)
    return Outcome(computed)


@handles(ScenarioKind.QUOTIENT_PIC)
def run_quotient_pic(payload: dict[str, Any]) -> Outcome:
    gl = _glattice(payload)
    fixed = fixed_sublattice(gl)
    quotient = half_gram_quotient(gl)
    return Outcome({
        "fixed_basis": [list(c) for c in fixed.matrix.columns()],
        "fixed_gram": fixed.source.gram,
        "quotient_gram": quotient.gram,
        "surface": recognize_quotient(quotient),
    })


def _class_or_case(payload: dict[str, Any], key: str, lattice: Lattice, fallback):
    if key in payload:
        return decode_int_vector(payload[key], key, lattice.rank)
    if fallback is None:
        raise SchemaError(f"Payload is missing {key!r}.")
    return fallback


@handles(ScenarioKind.AMPLE_CERT)
def run_ample_cert(payload: dict[str, Any]) -> Outcome:
    lattice, case = _lattice(payload)
    s = _class_or_case(payload, "s", lattice, case and case.ample)
    if "gens" in payload:
        gens = [decode_int_vector(g, "gens", lattice.rank) for g in payload["gens"]]
    elif case is not None:
        gens = list(case.effective_gens)
    else:
        raise SchemaError("Payload is missing 'gens'.")
    cert = nakai_certificate(lattice, s, gens)
    computed: dict[str, Any] = {
        "verdict": cert.verdict,
        "s": list(cert.s),
        "self_int": cert.self_int,
        "pairings": [
            {
                "generator": list(gens[c.index - 1]),
                "s_dot_gen": c.s_dot_gen,
                "s_dot_rest": c.s_dot_rest,
                "rest_square": c.rest_square,
            }
            for c in cert.pair_checks
        ],
        "reason": cert.reason,
    }
    if cert.self_int % 2 == 0:
        computed["genus"] = genus(lattice, s)
    return Outcome(computed, cert.assumptions)


@handles(ScenarioKind.EFFECTIVITY)
def run_effectivity(payload: dict[str, Any]) -> Outcome:
    lattice, case = _lattice(payload)
    ample = _class_or_case(payload, "ample", lattice, case and case.ample)
    results = []
    for v in _get(payload, "classes"):
        c = decode_int_vector(v, "classes", lattice.rank)
        try:
            results.append({"class": list(c), "result": effectivity(lattice, c, ample).value})
        except (SquareTooNegativeError, AmbiguousZeroPairingError) as e:
            results.append({"class": list(c), "result": type(e).__name__})
    return Outcome({"ample": list(ample), "results": results})


@handles(ScenarioKind.ORDER_CLASSIFY)
def run_order_classify(payload: dict[str, Any]) -> Outcome:
    order = _order(payload)
    result = classify_order(order)
    indices = ramification_transfer([(i, d.e) for i, d in enumerate(order.ramification)])
    return Outcome({
        "surface": order.surface.name,
        "class": result.kind,
        "k_a": list(result.k_a),
        "k_a_numerically_trivial": is_numerically_trivial(order.surface, result.k_a),
        "anti_k_square": result.anti_k_square,
        "test_pairings": list(result.test_pairings),
        "ramification_vector": list(indices),
        "overlap_applicable": overlap_applicable(indices, order.cover_degree),
        "maximality": maximality_check(order),
    })


@handles(ScenarioKind.MAXIMALITY)
def run_maximality(payload: dict[str, Any]) -> Outcome:
    order = _order(payload)
    return Outcome({
        "maximality": maximality_check(order),
        "cover_irreducible": [d.cover_irreducible for d in order.ramification],
    })


@handles(ScenarioKind.RESTRICTION)
def run_restriction(payload: dict[str, Any]) -> Outcome:
    gl = _glattice(payload)
    L = decode_int_vector(_get(payload, "L"), "L", gl.rank)
    if "indices" in payload:
        classes = restriction_profile(gl, L, decode_int_vector(payload["indices"], "indices"))
    else:
        classes = (restriction_class(gl, L, decode_int(_get(payload, "d"), "d")),)
    return Outcome(
        {"classes": [{"divisor": list(c.divisor), "claimed_torsion": c.claimed_torsion, "d": c.d} for c in classes]},
        (RESTRICTION_NOTE,),
    )


@handles(ScenarioKind.H0)
def run_h0(payload: dict[str, Any]) -> Outcome:
    a = decode_int(_get(payload, "a"), "a")
    b = decode_int(_get(payload, "b"), "b")
    n = decode_int(payload.get("n", 2), "n")
    computed: dict[str, Any] = {"pushforward": h0_hirzebruch(n, a, b)}
    if n == 2:
        computed["h0"] = h0_hirzebruch2(a, b)
    return Outcome(computed)


@handles(ScenarioKind.FIBRATION_H1)
def run_fibration_h1(payload: dict[str, Any]) -> Outcome:
    action = _fibration(payload)
    result = h1_structured(action.model, action)
    return Outcome({
        "factors": list(result.factors),
        "invariant_factors": list(result.invariant_factors),
        "order": result.order,
        "trivial": result.is_trivial(),
        "generators": [_encode_element(g) for g in result.generators],
    })


@handles(ScenarioKind.TWIST_CHECK)
def run_twist_check(payload: dict[str, Any]) -> Outcome:
    action = _fibration(payload)
    if "element" in payload:
        s = _element(payload["element"], action.model)
    else:
        # the torsion point of exact order n on the single elliptic summand
        s = GroupElement.of(elliptic=[(Fraction(1, action.order), 0)]).check(action.model)
    cocycle = cocycle_check(action, s)
    coboundary = coboundary_check(action, s) if cocycle else None
    return Outcome(
        {
            "order": action.order,
            "element": _encode_element(s),
            "cocycle": cocycle,
            "coboundary": coboundary,
            "nontrivial_twist": bool(cocycle and not coboundary),
        },
        (TWIST_NOTE,),
    )


@handles(ScenarioKind.SECTION_BUNDLE)
def run_section_bundle(payload: dict[str, Any]) -> Outcome:
    names = payload.get("fibration", {})
    fibration = TrivialFibration(
        str(names.get("fibre", "E")),
        str(names.get("base", "C")),
        str(names.get("origin", "e0")),
    )
    terms = payload.get("terms")
    if terms is None:
        expr = SectionExpr.single(_section_symbol(_get(payload, "section")))
    else:
        expr = SectionExpr(tuple(
            (_section_symbol(_get(t, "section")), decode_int(t.get("coefficient", 1), "coefficient")) for t in terms
        ))
    divisor = section_line_bundle(expr, fibration)
    return Outcome({"divisor": divisor.as_dict(), "trivial": divisor.is_trivial(), "rendered": divisor.render()})


@handles(ScenarioKind.MW_SUM)
def run_mw_sum(payload: dict[str, Any]) -> Outcome:
    model = surface_rational_elliptic()
    c1 = decode_int_vector(_get(payload, "c1"), "c1", model.rank)
    c2 = decode_int_vector(_get(payload, "c2"), "c2", model.rank)
    s0 = decode_int_vector(_get(payload, "s0"), "s0", model.rank)
    total = mw_sum_rational_elliptic(c1, c2, s0, model)
    return Outcome({
        "sum": list(total),
        "is_section": is_numerical_section(total, model),
        "square": model.pair(total, total),
    })
