"""Smoke test for the `swapset` extension module.

Build and install it first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

import json

import swapset


def main():
    p4 = swapset.Graph.path(4)
    r = swapset.dd_m_exact(p4)
    assert r.status == "finite" and r.value == 2, r
    assert r.certificate.verify(p4)

    star = swapset.Graph.star(3)
    r = swapset.dd_m_exact(star)
    assert r.status == "infinite" and r.value is None
    assert json.loads(r.to_json())["dd_m"] == "infinity"
    assert swapset.has_swap_set(star) is None
    assert swapset.is_strong_graph(star)

    c4 = swapset.Graph.cycle(4)
    assert swapset.dd_m_exact(c4).value == 2

    g, cert = swapset.star_product_swap(5, 4)
    assert cert.size == 8 and cert.verify(g)
    back = swapset.SwapCertificate.from_json(cert.to_json())
    assert back.matching == cert.matching

    g, cert = swapset.grid_swap_construct(16, 12)
    assert cert.verify(g) and cert.size <= 53

    g, cert = swapset.p3_strip_swap(5)
    assert cert.size == 17 and swapset.gamma_grid_dp(3, 21) == 16

    t = swapset.Graph.path(6)
    weight, parts = swapset.s_weight(t)
    assert weight == 3 and swapset.dd_m_tree(t).value == 3, parts

    bad = swapset.SwapCertificate(4, [(0, 3)])
    assert bad.violation(p4) == "matching pair 0-3 is not an edge"

    assert len(swapset.connected_graphs(5)) == 21
    try:
        swapset.Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("self-loop accepted")

    print("swapset smoke test passed")


if __name__ == "__main__":
    main()
