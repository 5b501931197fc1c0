from collections import Counter

import pytest

from qrank.verifier import REGISTRY
from qrank.verifier.manifest import IN_SCOPE


def test_manifest_has_no_duplicates():
    dup = [a for a, k in Counter(IN_SCOPE).items() if k > 1]
    assert not dup


def test_every_statement_has_exactly_one_check():
    anchors = Counter(spec.anchor for spec in REGISTRY.values())
    assert set(anchors) == set(IN_SCOPE), (set(IN_SCOPE) - set(anchors), set(anchors) - set(IN_SCOPE))
    assert all(k == 1 for k in anchors.values())


def test_dependencies_are_registered():
    for spec in REGISTRY.values():
        for d in spec.dependencies:
            assert d in REGISTRY, (spec.name, d)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_check_passes_at_default_order(name, full_run):
    r = full_run[name]
    assert r.status == "PASS", (r.reason, r.first_mismatch, r.details[-3:])
    assert r.order_checked == min(REGISTRY[name].order, REGISTRY[name].fixed_order or REGISTRY[name].order)
