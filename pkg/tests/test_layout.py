import random
import re
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from farey_diluter.layout import (CLOSED_COLOR, OPEN_COLOR, Inlet, NetworkModel, build_network,
                                  emit_description, emit_schematic, network_from_states,
                                  parse_description)
from farey_diluter.mixplan import InletStates, make_plan

SVG = "{http://www.w3.org/2000/svg}"


def random_model(rng, n=None):
    n = n or rng.randint(1, 8)
    return network_from_states(InletStates.from_mix(
        [rng.random() < 0.5 for _ in range(n)], [rng.random() < 0.5 for _ in range(n)]))


def ports(svg, kind):
    root = ET.fromstring(svg)
    out = {}
    for c in root.iter(SVG + "circle"):
        cls = c.get("class", "").split()
        if cls and cls[0] == kind:
            out[(c.get("data-fluid"), int(c.get("data-index")))] = (cls[1], c.get("fill"))
    return out


def test_network_9_13():
    m = build_network(make_plan(F(9, 13), 6))
    assert len(m.sample_inlets) + len(m.buffer_inlets) == 12
    assert m.open_mix_ports == [("sample", 0), ("sample", 3), ("buffer", 2)]
    assert [i.width for i in m.sample_inlets] == [1, 2, 4, 8, 16, 32]


def test_network_half_n1():
    m = build_network(make_plan(F(1, 2), 1))
    assert m.open_mix_ports == [("sample", 0), ("buffer", 0)]
    assert m.junctions == (("sample", 0), ("buffer", 0))


def test_network_all_closed():
    m = network_from_states(InletStates.from_mix([0] * 4, [0] * 4))
    assert m.open_mix_ports == []
    assert all(i.reuse_open for i in m.sample_inlets + m.buffer_inlets)


def test_model_validation():
    with pytest.raises(ValueError):
        Inlet("sample", 2, 4, True, True)
    with pytest.raises(ValueError):
        Inlet("sample", 2, 3, True, False)
    m = network_from_states(InletStates.from_mix([1, 0], [0, 1]))
    with pytest.raises(ValueError):
        NetworkModel(2, m.sample_inlets, m.buffer_inlets,
                     (("sample", 1), ("buffer", 1), ("sample", 0), ("buffer", 0)))
    with pytest.raises(ValueError):
        NetworkModel(2, m.sample_inlets[:1], m.buffer_inlets, m.junctions)


def test_description_9_13():
    text = emit_description(build_network(make_plan(F(9, 13), 6)))
    assert '"schema": "farey-diluter/network"' in text
    widths = [int(w) for w in re.findall(r'"width": (\d+)', text)]
    assert widths == [1, 2, 4, 8, 16, 32] * 2
    assert text.count('"fluid": "sample"') == 12  # 6 inlets + 6 junction entries


def test_description_round_trip_random():
    rng = random.Random(7)
    for _ in range(100):
        m = random_model(rng)
        text = emit_description(m)
        back = parse_description(text)
        assert back == m
        assert emit_description(back) == text


def test_parse_rejects_bad_documents():
    text = emit_description(network_from_states(InletStates.from_mix([1], [0])))
    with pytest.raises(ValueError):
        parse_description(text.replace("farey-diluter/network", "other"))
    with pytest.raises(ValueError):
        parse_description(text.replace('"version": 1', '"version": 9'))
    with pytest.raises(ValueError):
        parse_description(text.replace('"mix": "on"', '"mix": "maybe"'))
    with pytest.raises(ValueError):
        parse_description(text.replace('"reuse": "on"', '"reuse": "off"'))


def test_schematic_9_13_colors():
    svg = emit_schematic(build_network(make_plan(F(9, 13), 6)))
    mix = ports(svg, "mix-port")
    assert sum(state == "open" for state, _ in mix.values()) == 3
    assert sum(state == "closed" for state, _ in mix.values()) == 9
    assert mix[("sample", 0)] == ("open", OPEN_COLOR)
    assert mix[("sample", 3)] == ("open", OPEN_COLOR)
    assert mix[("buffer", 2)] == ("open", OPEN_COLOR)
    assert mix[("buffer", 0)] == ("closed", CLOSED_COLOR)


def test_schematic_empty_states_all_red():
    svg = emit_schematic(network_from_states(InletStates.from_mix([0] * 6, [0] * 6)))
    assert {fill for _, fill in ports(svg, "mix-port").values()} == {CLOSED_COLOR}
    assert {fill for _, fill in ports(svg, "reuse-port").values()} == {OPEN_COLOR}


def test_schematic_n1():
    svg = emit_schematic(build_network(make_plan(F(1, 2), 1)))
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
    assert len(ports(svg, "mix-port")) == 2
    assert len([g for g in root.iter(SVG + "text") if g.text in tuple("ABCDEF")]) == 6
    assert root.find(f".//{SVG}circle[@id='out']") is not None


def test_schematic_colors_match_model():
    rng = random.Random(11)
    for _ in range(30):
        m = random_model(rng)
        svg = emit_schematic(m)
        mix, reuse = ports(svg, "mix-port"), ports(svg, "reuse-port")
        for inlet in m.sample_inlets + m.buffer_inlets:
            key = (inlet.fluid, inlet.index)
            assert mix[key][1] == (OPEN_COLOR if inlet.mix_open else CLOSED_COLOR)
            assert reuse[key][1] == (OPEN_COLOR if inlet.reuse_open else CLOSED_COLOR)


def test_schematic_deterministic():
    rng = random.Random(3)
    for _ in range(10):
        m = random_model(rng)
        assert emit_schematic(m) == emit_schematic(parse_description(emit_description(m)))


def test_arm_widths_double():
    svg = emit_schematic(network_from_states(InletStates.from_mix([1] * 4, [0] * 4)))
    root = ET.fromstring(svg)
    widths = [float(g.find(f"{SVG}line[@class='arm']").get("stroke-width"))
              for g in root.iter(SVG + "g") if (g.get("id") or "").startswith("sample-")]
    assert all(b == pytest.approx(2 * a, abs=0.01) for a, b in zip(widths, widths[1:]))
