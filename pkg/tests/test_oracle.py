import pytest

from softcore.aim import aim_solve
from softcore.oracle import GridSolve, OracleError, default_r_max, grid_energies, shoot_eigenvalue
from softcore.potentials import INF, PotentialSpec


def test_hydrogen_ground_state():
    assert abs(shoot_eigenvalue(PotentialSpec(1, 0, 1, 0)) + 0.5) < 1e-8


def test_table_value_q2():
    assert abs(shoot_eigenvalue(PotentialSpec(1, 10, 2, 0)) + 0.0637389182) < 1e-7


def test_exact_point_q2():
    assert abs(shoot_eigenvalue(PotentialSpec(1, 4, 2, 0)) + 0.125) < 1e-8


@pytest.mark.parametrize("nodes", [0, 1, 2])
@pytest.mark.parametrize("l", [0, 1])
def test_node_count_selects_level(l, nodes):
    # hydrogen: the level with j radial nodes has n = j + l + 1
    n = nodes + l + 1
    E = shoot_eigenvalue(PotentialSpec(1, 0, 1, l), nodes)
    assert abs(E + 1 / (2 * n * n)) < 1e-8


def test_levels_increase_with_nodes():
    spec = PotentialSpec(1, 5, 2, 0)
    E = [shoot_eigenvalue(spec, j) for j in range(3)]
    assert E[0] < E[1] < E[2] < 0


def test_bracket_with_one_level():
    E = shoot_eigenvalue(PotentialSpec(1, 0, 1, 0), grid=GridSolve(E_bracket=(-0.6, -0.4)))
    assert abs(E + 0.5) < 1e-8


def test_bracket_without_levels():
    with pytest.raises(OracleError, match="bracket holds 0 eigenvalues"):
        shoot_eigenvalue(PotentialSpec(1, 0, 1, 0), grid=GridSolve(E_bracket=(-0.4, -0.2)))


def test_bracket_with_several_levels():
    with pytest.raises(OracleError, match=r"node counts"):
        shoot_eigenvalue(PotentialSpec(1, 0, 1, 0), grid=GridSolve(E_bracket=(-0.15, -0.01)))


def test_grid_validation():
    with pytest.raises(ValueError):
        GridSolve(steps=5000)
    with pytest.raises(ValueError):
        GridSolve(node_target=-1)


def test_grid_convergence_rate():
    spec = PotentialSpec(1, 10, 2, 0)
    r_max = 2 * default_r_max(spec, 0)
    # from 10^4 steps on the differences sit at round-off, so use coarse grids
    E1, E2, E3 = (grid_energies(spec, 0, r_max, s) for s in (500, 1000, 2000))
    assert abs(E1 - E2) >= 8 * abs(E2 - E3)


def test_general_q_sits_between_neighbours():
    E = {q: shoot_eigenvalue(PotentialSpec(1, 5, q, 0)) for q in (1, 1.5, 2, INF)}
    assert E[1] > E[1.5] > E[2] > E[INF]


AIM_R0 = {(1, 10): (45, 55), (1, 50): (75, 100), (2, 10): (3, 3), (2, 50): (3, 3)}


@pytest.mark.parametrize("q,beta,l", [(q, b, l) for q in (1, 2) for b in (10, 50) for l in (0, 1)])
def test_agrees_with_aim(q, beta, l):
    spec = PotentialSpec(1, beta, q, l)
    aim = aim_solve(spec, AIM_R0[(q, beta)][l], point="table")
    assert aim.converged
    assert abs(shoot_eigenvalue(spec) - float(aim.energy)) <= 1e-6
