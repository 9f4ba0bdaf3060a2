import numpy as np
import pytest

from grslab import (
    DomainError,
    GrammarError,
    ResolutionError,
    SampleRep,
    SpectralHamiltonian,
    StructureError,
    apply_spectral,
    eigen_residual,
    fd_apply,
    fd_matrix,
    gauss_hermite_rule,
    spectral_coefficients,
    to_samples,
    uniform_trapezoid_rule,
)
from grslab.hamiltonian import spectral_metric_symmetry_defect

GRID = uniform_trapezoid_rule(12.0, 4000)
COARSE = uniform_trapezoid_rule(12.0, 2000)


@pytest.fixture(scope="module")
def shifted_h(shifted_sys):
    lams = tuple(2 * n + 1 + 0.25 for n in range(shifted_sys.n))
    return SpectralHamiltonian(lams, shifted_sys, "phi_psi")


class TestSpectralForm:
    def test_members_are_eigenvectors(self, shifted_sys, shifted_h):
        out = apply_spectral(shifted_h, shifted_sys.phi[2])
        want = shifted_h.lambdas[2] * np.asarray(shifted_sys.phi_samples[2])
        defect = np.max(np.abs(out.samples - want))
        assert defect <= 1e-8

    def test_swapped_direction(self, shifted_sys):
        lams = tuple(2 * n + 1 + 0.25 for n in range(shifted_sys.n))
        h = SpectralHamiltonian(lams, shifted_sys, "psi_phi")
        out = apply_spectral(h, shifted_sys.psi[1])
        want = lams[1] * np.asarray(shifted_sys.psi_samples[1])
        assert np.max(np.abs(out.samples - want)) <= 1e-8

    def test_pairing_symmetry(self, shifted_sys, rng):
        # <H_{phi,psi} f, g> = <f, H_{psi,phi} g> for f in span phi, g in span psi
        lams = tuple(float(k) + 1.0 for k in range(shifted_sys.n))
        h_fwd = SpectralHamiltonian(lams, shifted_sys, "phi_psi")
        h_bwd = SpectralHamiltonian(lams, shifted_sys, "psi_phi")
        w = shifted_sys.rule.dx_weights
        c = rng.standard_normal(shifted_sys.n) + 1j * rng.standard_normal(shifted_sys.n)
        d = rng.standard_normal(shifted_sys.n) + 1j * rng.standard_normal(shifted_sys.n)
        f = SampleRep(shifted_sys.rule, c @ shifted_sys.phi_samples)
        g = SampleRep(shifted_sys.rule, d @ shifted_sys.psi_samples)
        lhs = np.sum(w * apply_spectral(h_fwd, f).samples * np.conj(g.samples))
        rhs = np.sum(w * f.samples * np.conj(apply_spectral(h_bwd, g).samples))
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))

    def test_metric_symmetry_on_span(self, shifted_h, rng):
        n = shifted_h.sys.n
        for _ in range(5):
            c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            c /= np.linalg.norm(c)
            d /= np.linalg.norm(d)
            assert spectral_metric_symmetry_defect(shifted_h, c, d) <= 1e-8

    def test_eigenvalue_count_enforced(self, shifted_sys):
        with pytest.raises(StructureError):
            SpectralHamiltonian((1.0,), shifted_sys)

    def test_direction_validated(self, shifted_sys):
        with pytest.raises(DomainError):
            SpectralHamiltonian((1.0,) * shifted_sys.n, shifted_sys, "up")


class TestFdAssembly:
    def test_zero_shift_is_hermitian(self):
        hd = fd_matrix("shifted_ho", GRID, a=0.0)
        assert hd.is_hermitian

    def test_skew_part_is_shift_potential(self):
        hd = fd_matrix("shifted_ho", GRID, a=0.5)
        assert not hd.is_hermitian
        assert np.allclose(hd.diag.imag, 2 * 0.5 * GRID.nodes)
        assert np.allclose(hd.lower.imag, 0.0) and np.allclose(hd.upper.imag, 0.0)

    def test_example1_not_hermitian(self):
        assert not fd_matrix("example1", GRID).is_hermitian

    def test_anharmonic_symmetric(self):
        hd = fd_matrix("anharmonic", GRID, beta=4.0)
        assert hd.is_hermitian
        assert np.array_equal(hd.lower, hd.upper)

    def test_zero_perturbation_matches_anharmonic(self):
        plain = fd_matrix("anharmonic", GRID, beta=4.0)
        trivial = fd_matrix("perturbed_anharmonic", GRID, beta=4.0, p="0")
        assert np.array_equal(plain.diag, trivial.diag)
        assert np.array_equal(plain.lower, trivial.lower)
        assert np.array_equal(plain.upper, trivial.upper)

    def test_validation(self):
        with pytest.raises(DomainError):
            fd_matrix("free_particle", GRID)
        with pytest.raises(StructureError):
            fd_matrix("example1", gauss_hermite_rule(300, 1.0))
        with pytest.raises(ResolutionError):
            fd_matrix("example1", uniform_trapezoid_rule(12.0, 400))
        with pytest.raises(DomainError):
            fd_matrix("anharmonic", GRID, beta=1.5)
        with pytest.raises(GrammarError):
            fd_matrix("perturbed_anharmonic", GRID, beta=4.0, p="(sinh x)")

    def test_fd_apply_matches_dense(self):
        hd = fd_matrix("example1", uniform_trapezoid_rule(12.0, 500))
        v = np.exp(-hd.grid.nodes**2)
        dense = (
            np.diag(hd.diag)
            + np.diag(hd.upper, 1)
            + np.diag(hd.lower, -1)
        )
        assert np.allclose(fd_apply(hd, v), dense @ v, atol=1e-12)


class TestEigenResiduals:
    def test_example1_ladder(self, example1_sys):
        from grslab.cli import example1_eigen_defect

        assert example1_eigen_defect(example1_sys) <= 5e-3

    def test_shifted_ladder(self, shifted_sys):
        from grslab.cli import shifted_ho_eigen_defect

        assert shifted_ho_eigen_defect(shifted_sys, 0.5) <= 5e-3

    def test_perturbed_ladder(self, perturbed_sys):
        from grslab.catalog import DEFAULT_P_SOURCE
        from grslab.cli import perturbed_eigen_defect

        assert perturbed_eigen_defect(perturbed_sys, 4.0, DEFAULT_P_SOURCE) <= 1e-2

    def test_second_order_convergence(self, shifted_sys):
        h_fine = fd_matrix("shifted_ho", GRID, a=0.5)
        h_coarse = fd_matrix("shifted_ho", COARSE, a=0.5)
        for n in range(4):
            lam = 2 * n + 1 + 0.25
            r_c = eigen_residual(h_coarse, to_samples(shifted_sys.phi[n], COARSE), lam)
            r_f = eigen_residual(h_fine, to_samples(shifted_sys.phi[n], GRID), lam)
            assert 3.0 <= r_c / r_f <= 5.0

    def test_spectral_vs_differential(self, shifted_sys, shifted_h, rng):
        # both realizations act the same on the span of the first 8 members
        hd = fd_matrix("shifted_ho", GRID, a=0.5)
        c = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        c /= np.linalg.norm(c)
        spec_c = np.zeros(shifted_sys.n, dtype=complex)
        spec_c[:8] = c
        f_spec = SampleRep(shifted_sys.rule, spec_c @ shifted_sys.phi_samples)
        coeffs = spectral_coefficients(shifted_h, f_spec)
        from grslab import family_samples

        phi_fd = family_samples(shifted_sys, "phi", GRID)
        spectral_on_grid = coeffs @ phi_fd
        f_fd = spec_c @ phi_fd
        differential = fd_apply(hd, f_fd)
        inner_slice = slice(1, -1)
        gap = np.linalg.norm((spectral_on_grid - differential)[inner_slice])
        scale = np.linalg.norm(differential[inner_slice])
        assert gap / scale <= 1e-2

    def test_boundary_mass_guard(self):
        hd = fd_matrix("anharmonic", GRID, beta=4.0)
        flat = np.ones(len(GRID))
        with pytest.raises(ResolutionError):
            eigen_residual(hd, flat, 1.0)

    def test_zero_function_rejected(self):
        hd = fd_matrix("anharmonic", GRID, beta=4.0)
        with pytest.raises(DomainError):
            eigen_residual(hd, np.zeros(len(GRID)), 1.0)
