"""Smoke tests for the python bindings: every exported call, one happy path each."""

import json

import roundsleek


def test_version():
    assert roundsleek.__version__


def test_gallery_names():
    names = roundsleek.gallery_names()
    assert "closed-interval" in names
    assert "quadrant" in names


def test_round_holds_on_closed_interval():
    report, code = roundsleek.run_check("gallery:closed-interval", "round")
    assert code == 0
    doc = json.loads(report)
    assert doc["verdict"] == "holds-exact"
    assert doc["witness"] is None


def test_sleek_violated_on_closed_interval_and_replays():
    report, code = roundsleek.run_check("gallery:closed-interval", "sleek")
    assert code == 1
    doc = json.loads(report)
    assert doc["verdict"] == "violated"
    assert doc["witness"]["kind"] == "sphere-not-limit"
    ok, diagnostics = roundsleek.replay(report)
    assert ok, diagnostics


def test_inline_definition_and_normalization():
    definition = json.dumps(
        {
            "schema": 1,
            "type": "interval_union",
            "intervals": [
                {"lo": "0", "hi": "1"},
                {"lo": "2", "hi": "3"},
            ],
        }
    )
    report, code = roundsleek.run_check(definition, "round")
    assert code == 1
    doc = json.loads(report)
    assert doc["witness"]["kind"] == "min-on-open-set"

    normalized = roundsleek.normalize_space(definition)
    assert roundsleek.normalize_space(normalized) == normalized


def test_render_svg():
    svg = roundsleek.render_svg("gallery:quadrant")
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")
    assert roundsleek.render_svg("gallery:quadrant") == svg


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    return failures


if __name__ == "__main__":
    raise SystemExit(main())
