import itertools
import random

import pytest

import lrckit


def test_field_arithmetic():
    f = lrckit.Field.make(8)
    assert f.order == 256
    assert f.add(0x9, 0x5) == 0xC
    for a in range(1, 256):
        assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(Exception):
        f.inv(0)


def test_rs_roundtrip():
    rs = lrckit.RsCode(6, 4)
    msg = [1, 2, 3, 4]
    cw = rs.encode(msg)
    assert cw[:4] == msg
    for positions in itertools.combinations(range(1, 7), 4):
        assert rs.decode([(p, cw[p - 1]) for p in positions]) == msg


def test_lrc_encode_repair_decode():
    params = lrckit.CodeParams(6, 4, 2)
    code = lrckit.LrcCode(params)
    rng = random.Random(5)
    file = [rng.randrange(256) for _ in range(16)]
    nodes = code.encode(file)

    assert [(s.row, s.index) for s in code.node_slots(1)] == [(1, 1), (2, 2), (3, 3)]

    rebuilt = code.repair(1, [nodes[1], nodes[2]])
    assert rebuilt.blocks == nodes[0].blocks
    assert code.decode([nodes[1], nodes[2], nodes[3], nodes[4]]) == file


def test_bounds_and_certify():
    assert lrckit.distance_bound(6, 2, 8, 3) == 3
    assert lrckit.scalar_bound(6, 4, 2) == 2
    params = lrckit.CodeParams(6, 4, 2)
    assert lrckit.effective_rate(params) == (4, 9)
    report = lrckit.certify(params)
    assert report.distance == 3
    assert report.bound == 3
    assert report.locality == 2
    assert report.pass_


def test_flownet_capacity():
    net = lrckit.build_flownet(6, 2, 8, 3)
    assert net.d == 3
    assert net.num_collectors == 15
    assert lrckit.min_cut_all_dcs(net) == 9
    assert lrckit.multicast_capacity(6, 2, 8, 3) == 9


def test_rlnc_success_rate():
    net = lrckit.build_flownet(6, 2, 9, 3)
    trials, successes = lrckit.rlnc_verify(net, q=256, trials=30, seed=1)
    assert trials == 30
    assert successes >= 24


def test_store_repair_retrieve(tmp_path):
    params = lrckit.CodeParams(6, 4, 2)
    data = bytes(random.Random(7).randrange(256) for _ in range(3000))
    lrckit.store(data, params, tmp_path)

    report = lrckit.fail_and_repair(tmp_path, 1)
    assert report.success
    assert report.contacted == [2, 3]
    assert report.blocks_transferred == 6

    assert lrckit.retrieve(tmp_path) == data
    assert lrckit.retrieve(tmp_path, allowed={2, 3, 4, 5}) == data
    with pytest.raises(Exception):
        lrckit.retrieve(tmp_path, allowed={1, 2, 3})


def test_compare_schemes():
    report = lrckit.compare_schemes(lrckit.CodeParams(6, 4, 2), failures=5, seed=3)
    assert report.lrc.nodes_contacted == 2
    assert report.rs.nodes_contacted == 4
    assert report.lrc.repair_bytes_per_failure < report.rs.repair_bytes_per_failure
    assert report.lrc.storage_overhead == (9, 4)
    assert report.rs.storage_overhead == (3, 2)


def test_ceiling_identities():
    trials, failures = lrckit.check_ceiling_identities(2000, seed=11)
    assert trials == 2000
    assert failures == 0
