//! Verification suites behind `cliffan verify`.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Check, Params, Report};
use crate::algebra::{rational, FMv, Multivector, RMv};
use crate::error::{Error, Result};
use crate::fd::{dirac_residual, dirac_with, Stencil};
use crate::integration::{
    ball_rule, cap_boundary_rule, cauchy_green_k, cauchy_integral, cauchy_integral_off_surface, greens_formula,
    harmonic_surface_mean, hardy_split, mean_value, singular_cauchy, singular_cauchy_symmetric,
    spherical_cauchy_formula, sphere_rule, surface_integral, BoundaryDensity, QuadratureRule, DEFAULT_RESOLUTION,
};
use crate::kernels::{
    dilation_kernel, iterated_family, kernel_constants, kernel_from_constants, laplace_planewave_identity,
    periodic_kernel_cot, plane_wave, projector_exact, spherical_cauchy, spherical_dirac, spherical_green, WaveSign,
};
use crate::moebius::{
    cayley_matrix, change_of_variables_residual, ck_on_sphere, kernel_covariance_residual, pullback, Generator,
    VahlenMatrix,
};
use crate::sampling::{ball_point, unit_vector};
use crate::series::{
    fueter_polynomial, sphere_inner_product, taylor_coefficients, MultiIndex,
};
use crate::symcalc::{CliffordPolynomial, NumericPoly, VariableKind};

/// Suites runnable by name; `all` runs each of them.
pub const SUITES: &[&str] = &[
    "fueter", "constants", "cauchy", "mean", "green", "kgreen", "taylor", "plemelj", "spherical", "moebius",
    "planewave", "periodic",
];

/// Default tolerances, each overridable by `--tol`.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub cauchy_theorem: f64,
    pub reproduction: f64,
    pub mean: f64,
    pub green: f64,
    pub taylor: f64,
    pub pv_constant: f64,
    pub plemelj: f64,
    pub covariance: f64,
    pub pullback: f64,
    pub change_of_variables: f64,
    pub sphere_ck: f64,
    pub spherical_kernel: f64,
    pub spherical_cauchy: f64,
    pub finite_difference: f64,
    pub laplace: f64,
}

pub const DEFAULT_TOLERANCES: Tolerances = Tolerances {
    cauchy_theorem: 1e-8,
    reproduction: 1e-7,
    mean: 1e-7,
    green: 1e-6,
    taylor: 1e-8,
    pv_constant: 1e-10,
    plemelj: 1e-4,
    covariance: 1e-8,
    pullback: 1e-5,
    change_of_variables: 1e-5,
    sphere_ck: 1e-8,
    spherical_kernel: 1e-6,
    spherical_cauchy: 1e-5,
    finite_difference: 1e-5,
    laplace: 1e-8,
};

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub degree: u32,
    pub resolution: usize,
    pub seed: u64,
    pub tol: Option<f64>,
    pub quick: bool,
    pub timing: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 3,
            degree: 2,
            resolution: DEFAULT_RESOLUTION,
            seed: 7,
            tol: None,
            quick: false,
            timing: false,
        }
    }
}

impl SuiteParams {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn count(&self, full: usize) -> usize {
        if self.quick {
            (full / 4).max(2)
        } else {
            full
        }
    }

    fn resolution(&self) -> usize {
        if self.quick {
            self.resolution.min(24)
        } else {
            self.resolution
        }
    }

    fn report(&self, suite: &str, degree: bool, resolution: bool) -> Report {
        Report::new(
            suite,
            Params {
                n: self.n,
                degree: degree.then_some(self.degree),
                resolution: resolution.then_some(self.resolution()),
                seed: self.seed,
            },
        )
    }

    fn require_n(&self, lo: usize, hi: usize) -> Result<()> {
        if (lo..=hi).contains(&self.n) {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("this suite needs {lo} ≤ n ≤ {hi}, got {}", self.n)))
        }
    }
}

/// Runs a suite by name. Deterministic given the parameters.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Report> {
    let start = Instant::now();
    let mut report = match name {
        "fueter" => fueter(p),
        "constants" => constants(p),
        "cauchy" => cauchy(p),
        "mean" => mean(p),
        "green" => green(p),
        "kgreen" => kgreen(p),
        "taylor" => taylor(p),
        "plemelj" => plemelj(p),
        "spherical" => spherical(p),
        "moebius" => moebius(p),
        "planewave" => planewave(p),
        "periodic" => periodic(p),
        "all" => {
            let mut all = p.report("all", true, true);
            for s in SUITES {
                let mut q = p.clone();
                q.timing = false;
                all.absorb(run_suite(s, &q)?);
            }
            Ok(all)
        }
        other => Err(Error::InvalidParameter(format!("unknown suite `{other}`; known: {}, all", SUITES.join(", ")))),
    }?;
    if p.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

fn random_coeff(rng: &mut ChaCha8Rng, n: usize) -> RMv {
    let blades = 1u32 << n;
    RMv::from_terms(
        n,
        (0..2).map(|_| (rng.gen_range(0..blades), rational(rng.gen_range(-3..=3), 2))),
    )
}

/// `Σ P_j c_j` over all Fueter polynomials of degree ≤ `degree`.
pub fn random_monogenic(n: usize, degree: u32, rng: &mut ChaCha8Rng) -> Result<CliffordPolynomial> {
    let mut f = CliffordPolynomial::zero(n, VariableKind::Vector);
    for idx in MultiIndex::up_to(n, degree) {
        f = &f + &fueter_polynomial(&idx)?.right_mul_mv(&random_coeff(rng, n));
    }
    Ok(f)
}

fn unit_rule(n: usize, m: usize) -> Result<QuadratureRule> {
    sphere_rule(n, &vec![0.0; n], 1.0, m)
}

fn rel(a: &FMv, b: &FMv) -> f64 {
    a.dist(b) / b.norm().max(1.0)
}

fn fueter(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 8)?;
    let mut r = p.report("fueter", true, false);
    let mut bad = 0usize;
    let mut count = 0usize;
    let mut restrict_bad = 0usize;
    for idx in MultiIndex::up_to(p.n, p.degree) {
        let f = fueter_polynomial(&idx)?;
        count += 1;
        if !f.dirac_left()?.is_zero() {
            bad += 1;
        }
        // On x₁ = 0, P_j restricts to the monomial x₂^{j₂} ⋯ x_n^{j_n}.
        let mut exps = vec![0u32];
        exps.extend(&idx.0);
        let mono = CliffordPolynomial::from_terms(p.n, VariableKind::Vector, 0, vec![(exps, RMv::one(p.n))])?;
        if f.restrict_zero(0) != mono {
            restrict_bad += 1;
        }
    }
    r.push(Check::new(format!("D P_j = 0 ({count} polynomials)"), bad as f64, 0.0));
    r.push(Check::new("P_j restricts to x'^j", restrict_bad as f64, 0.0));
    Ok(r)
}

fn constants(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 8)?;
    let mut r = p.report("constants", false, false);
    let kmax = if p.quick { 4 } else { 6 };
    let family = iterated_family(p.n, kmax)?;
    let mut failures = 0;
    for (i, g) in family.iter().enumerate() {
        let k = i + 1;
        let (c, a) = kernel_constants(p.n, k)?;
        let again = kernel_constants(p.n, k)?;
        if (c.clone(), a.clone()) != again || c != g.c || a != g.a {
            failures += 1;
        }
        let rebuilt = kernel_from_constants(p.n, k, &c, a.as_ref())?;
        if rebuilt != g.symbolic {
            failures += 1;
        }
        if k > 1 && rebuilt.dirac_left() != family[i - 1].symbolic {
            failures += 1;
        }
    }
    r.push(Check::new(format!("C(n,k), A(n,k) stable and D G_k = G_(k-1), k ≤ {kmax}"), failures as f64, 0.0));
    let last = &family[kmax - 1].symbolic;
    r.push(Check::exact(format!("D^{kmax} G_{kmax} = 0"), last.dirac_power(kmax as u32).is_zero()));
    Ok(r)
}

fn cauchy(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 5)?;
    let mut r = p.report("cauchy", true, true);
    let mut rng = p.rng();
    let f = random_monogenic(p.n, p.degree, &mut rng)?;
    let dens = BoundaryDensity::from_polynomial(&f);
    let m = p.resolution();
    let rule = unit_rule(p.n, m)?;
    r.push(Check::new("∫ n f dσ = 0", surface_integral(None, Some(&dens), &rule)?.norm(), p.tol(DEFAULT_TOLERANCES.cauchy_theorem)));
    let mut worst: f64 = 0.0;
    for _ in 0..p.count(20) {
        let y = ball_point(&mut rng, p.n, 0.6);
        worst = worst.max(rel(&cauchy_integral(&dens, &y, &rule)?, &f.evaluate_f64(&y)));
    }
    r.push(Check::new("interior reproduction", worst, p.tol(DEFAULT_TOLERANCES.reproduction)));
    let mut ext: f64 = 0.0;
    for _ in 0..p.count(5) {
        let u = unit_vector(&mut rng, p.n);
        let y: Vec<f64> = u.iter().map(|a| a * rng.gen_range(1.5..3.0)).collect();
        ext = ext.max(cauchy_integral_off_surface(&dens, &y, &rule)?.norm());
    }
    r.push(Check::new("exterior vanishing", ext, p.tol(DEFAULT_TOLERANCES.reproduction)));
    // Spectral decay: halving the resolution must cost at least a factor 10
    // unless both errors are already at rounding level.
    let y = ball_point(&mut rng, p.n, 0.6);
    let exact = f.evaluate_f64(&y);
    let coarse = rel(&cauchy_integral(&dens, &y, &unit_rule(p.n, m / 2)?)?, &exact);
    let fine = rel(&cauchy_integral(&dens, &y, &rule)?, &exact);
    let ratio = if coarse < 1e-12 { 0.0 } else { fine / coarse };
    r.push(Check::new("error ratio under resolution doubling", ratio, 0.1));
    Ok(r)
}

fn mean(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 5)?;
    let mut r = p.report("mean", true, true);
    let mut rng = p.rng();
    let f = random_monogenic(p.n, p.degree, &mut rng)?;
    let dens = BoundaryDensity::from_polynomial(&f);
    let m = p.resolution().min(20);
    let mut ball_err: f64 = 0.0;
    let mut surf_err: f64 = 0.0;
    for _ in 0..p.count(4) {
        let y = ball_point(&mut rng, p.n, 1.0);
        let radius = rng.gen_range(0.3..1.0);
        let exact = f.evaluate_f64(&y);
        let ball = ball_rule(p.n, &y, radius, m)?;
        ball_err = ball_err.max(rel(&mean_value(&dens, &y, radius, &ball)?, &exact));
        let sph = sphere_rule(p.n, &y, radius, p.resolution())?;
        surf_err = surf_err.max(rel(&harmonic_surface_mean(&dens, &sph)?, &exact));
    }
    r.push(Check::new("ball mean", ball_err, p.tol(DEFAULT_TOLERANCES.mean)));
    r.push(Check::new("surface mean", surf_err, p.tol(DEFAULT_TOLERANCES.mean)));
    Ok(r)
}

/// A harmonic, non-monogenic polynomial: random monogenic part plus
/// `x₁x₂ c` and `(x₁² − x₃²) c'`.
fn random_harmonic(n: usize, degree: u32, rng: &mut ChaCha8Rng) -> Result<CliffordPolynomial> {
    let var = |i| CliffordPolynomial::var(n, VariableKind::Vector, i);
    let mut h = random_monogenic(n, degree, rng)?;
    h = &h + &(&var(1) * &var(2)).right_mul_mv(&random_coeff(rng, n));
    if n >= 3 {
        h = &h + &(&(&var(1) * &var(1)) - &(&var(3) * &var(3))).right_mul_mv(&random_coeff(rng, n));
    }
    Ok(h)
}

fn green(p: &SuiteParams) -> Result<Report> {
    p.require_n(3, 5)?;
    let mut r = p.report("green", true, true);
    let mut rng = p.rng();
    let h = random_harmonic(p.n, p.degree, &mut rng)?;
    if !h.laplacian().is_zero() {
        return Err(Error::Precondition("test data must be harmonic".into()));
    }
    let (hd, dhd) = (BoundaryDensity::from_polynomial(&h), BoundaryDensity::from_polynomial(&h.dirac_left()?));
    let rule = unit_rule(p.n, p.resolution())?;
    let mut worst: f64 = 0.0;
    for _ in 0..p.count(10) {
        let y = ball_point(&mut rng, p.n, 0.6);
        worst = worst.max(rel(&greens_formula(&hd, &dhd, &y, &rule)?, &h.evaluate_f64(&y)));
    }
    r.push(Check::new("Green reproduction", worst, p.tol(DEFAULT_TOLERANCES.green)));
    Ok(r)
}

fn kgreen(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 5)?;
    let mut r = p.report("kgreen", true, true);
    let mut rng = p.rng();
    let rule = unit_rule(p.n, p.resolution())?;
    let x = CliffordPolynomial::x_vector(p.n);
    for k in 1..=3u32 {
        let f = &x.pow(k - 1) * &random_monogenic(p.n, p.degree.min(2), &mut rng)?;
        let mut ders = vec![f.clone()];
        for _ in 1..k {
            let d = ders.last().expect("nonempty").dirac_left()?;
            ders.push(d);
        }
        if !ders.last().expect("nonempty").dirac_left()?.is_zero() {
            return Err(Error::Precondition(format!("test data must be {k}-monogenic")));
        }
        let dens: Vec<BoundaryDensity> = ders.iter().map(BoundaryDensity::from_polynomial).collect();
        let mut worst: f64 = 0.0;
        for _ in 0..p.count(5) {
            let y = ball_point(&mut rng, p.n, 0.6);
            worst = worst.max(rel(&cauchy_green_k(&dens, &y, &rule)?, &f.evaluate_f64(&y)));
        }
        r.push(Check::new(format!("Cauchy–Green reproduction k={k}"), worst, p.tol(DEFAULT_TOLERANCES.green)));
    }
    Ok(r)
}

fn taylor(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 4)?;
    let mut r = p.report("taylor", true, true);
    let order = p.degree.min(3);
    let mut w = vec![0.0; p.n];
    w[0] = 0.25;
    w[1] = -0.5;
    // Shifted spheres make the integrands smooth trigonometric polynomials;
    // 20 nodes per angle resolve degree 3 to rounding level.
    let m = p.resolution().min(20);
    let rule = sphere_rule(p.n, &w, 1.0, m)?;
    let shift: Vec<_> = w.iter().map(|a| rational((-a * 4.0) as i64, 4)).collect();
    let mut worst: f64 = 0.0;
    for idx in MultiIndex::up_to(p.n, order) {
        let f = fueter_polynomial(&idx)?.shift(&shift);
        let t = taylor_coefficients(&BoundaryDensity::from_polynomial(&f), order, &rule)?;
        for (j, a) in &t.coefficients {
            let expected = if *j == idx { FMv::one(p.n) } else { FMv::zero(p.n) };
            worst = worst.max(a.dist(&expected));
        }
    }
    r.push(Check::new(format!("Fueter basis coefficients, order ≤ {order}"), worst, p.tol(DEFAULT_TOLERANCES.taylor)));
    let unit = unit_rule(p.n, m)?;
    let x = CliffordPolynomial::x_vector(p.n);
    let mut ip: f64 = 0.0;
    for l in 1..=order.max(1) {
        for lo in MultiIndex::all_of_degree(p.n, l - 1) {
            let xp = BoundaryDensity::from_polynomial(&(&x * &fueter_polynomial(&lo)?));
            for hi in MultiIndex::all_of_degree(p.n, l) {
                let q = BoundaryDensity::from_polynomial(&fueter_polynomial(&hi)?);
                ip = ip.max(sphere_inner_product(&xp, &q, &unit)?.abs());
            }
        }
    }
    r.push(Check::new("⟨x P_(l−1), P_l⟩ = 0", ip, p.tol(DEFAULT_TOLERANCES.taylor)));
    Ok(r)
}

/// `G(x) P(x^{-1})`, an outer monogenic function.
fn kelvin(p: &CliffordPolynomial) -> Result<BoundaryDensity> {
    let n = p.dim();
    let inv = VahlenMatrix::generator(n, Generator::Inversion)?;
    let np = NumericPoly::new(p);
    Ok(BoundaryDensity::from_fn(n, move |x| {
        pullback(&inv, |y: &[f64]| np.eval(y)).eval(x).expect("points on the unit sphere")
    }))
}

fn plemelj(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 4)?;
    let mut r = p.report("plemelj", true, true);
    let mut rng = p.rng();
    let rule = unit_rule(p.n, p.resolution())?;
    let one = BoundaryDensity::constant(FMv::one(p.n));
    let mut c1: f64 = 0.0;
    for _ in 0..3 {
        let z = unit_vector(&mut rng, p.n);
        c1 = c1.max(singular_cauchy_symmetric(&one, &z, &rule)?.dist(&FMv::scalar(p.n, 0.5)));
    }
    r.push(Check::new("C1 = 1/2", c1, p.tol(DEFAULT_TOLERANCES.pv_constant)));
    let tol = p.tol(DEFAULT_TOLERANCES.plemelj);
    let (mut inner_err, mut outer_err): (f64, f64) = (0.0, 0.0);
    for idx in MultiIndex::up_to(p.n, p.degree.min(3)) {
        let f = fueter_polynomial(&idx)?;
        let (inner, outer) = (BoundaryDensity::from_polynomial(&f), kelvin(&f)?);
        let z = unit_vector(&mut rng, p.n);
        inner_err = inner_err.max(singular_cauchy(&inner, &z, &rule)?.dist(&inner.eval(&z).scale(&0.5)));
        outer_err = outer_err.max(singular_cauchy(&outer, &z, &rule)?.dist(&outer.eval(&z).scale(&-0.5)));
    }
    r.push(Check::new("Cθ = θ/2 (inner)", inner_err, tol));
    r.push(Check::new("Cθ = −θ/2 (outer)", outer_err, tol));
    let f = random_monogenic(p.n, p.degree.min(2), &mut rng)?;
    let g = random_monogenic(p.n, 1, &mut rng)?;
    let (inner, outer) = (BoundaryDensity::from_polynomial(&f), kelvin(&g)?);
    let theta = inner.add(&outer);
    let split_rule = unit_rule(p.n, p.resolution().min(16))?;
    let (i, _) = hardy_split(&theta, &split_rule)?;
    let (ii, _) = hardy_split(&i, &split_rule)?;
    let (mut split, mut again): (f64, f64) = (0.0, 0.0);
    for _ in 0..p.count(4) {
        let z = unit_vector(&mut rng, p.n);
        let iz = i.eval(&z);
        split = split.max(rel(&iz, &inner.eval(&z)));
        again = again.max(rel(&ii.eval(&z), &iz));
    }
    r.push(Check::new("Hardy split recovers the inner part", split, tol));
    r.push(Check::new("re-splitting the inner part", again, tol));
    Ok(r)
}

fn sphere_point(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    unit_vector(rng, dim)
}

fn spherical(p: &SuiteParams) -> Result<Report> {
    p.require_n(3, 5)?;
    let mut r = p.report("spherical", false, true);
    let mut rng = p.rng();
    let (n, dim) = (p.n, p.n + 1);
    let (mut dirac, mut green_rel): (f64, f64) = (0.0, 0.0);
    for _ in 0..p.count(50) {
        let (x, y) = (sphere_point(&mut rng, dim), sphere_point(&mut rng, dim));
        let g = |q: &[f64]| spherical_cauchy(q, &y).expect("distinct points");
        dirac = dirac.max(spherical_dirac(&g, &x).norm() / g(&x).norm().max(1.0));
        let h = |q: &[f64]| FMv::scalar(dim, spherical_green(q, &y).expect("distinct points"));
        let lhs = &spherical_dirac(&h, &x) - &(&FMv::vector(dim, &x) * &h(&x));
        green_rel = green_rel.max(rel(&lhs, &g(&x)));
    }
    r.push(Check::new("x Λ G_s + (n/2) x G_s = 0", dirac, p.tol(DEFAULT_TOLERANCES.spherical_kernel)));
    r.push(Check::new("(D_s − x) H_s = G_s", green_rel, p.tol(DEFAULT_TOLERANCES.spherical_kernel)));
    // Λ⟨x, y'⟩ = x ∧ y' for a rational y'.
    let mut yc = vec![rational(0, 1); dim];
    yc[0] = rational(3, 5);
    yc[dim - 1] = rational(4, 5);
    let yv = RMv::vector(dim, &yc);
    let x = CliffordPolynomial::x_vector(dim);
    let ip = (&x * &CliffordPolynomial::constant(dim, VariableKind::Vector, yv.clone())).grade_part(0).scale(&rational(-1, 1));
    let wedge = (&x * &CliffordPolynomial::constant(dim, VariableKind::Vector, yv)).grade_part(2);
    r.push(Check::exact("Λ⟨x, y'⟩ = x ∧ y' (exact)", ip.angular()? == wedge));
    let mut axis = vec![0.0; dim];
    axis[n] = 1.0;
    let angle = 1.2f64;
    let rule = cap_boundary_rule(&axis, angle, p.resolution())?;
    let mut src = vec![0.0; dim];
    src[0] = 0.6;
    src[n] = -0.8;
    let c = &FMv::basis(dim, 2) + &FMv::scalar(dim, 0.3);
    let f = BoundaryDensity::from_fn(dim, move |q| &spherical_cauchy(q, &src).expect("source off the cap") * &c);
    let mut worst: f64 = 0.0;
    let mut tested = 0;
    while tested < p.count(5) {
        let y = sphere_point(&mut rng, dim);
        if y[n] <= angle.cos() + 0.5 {
            continue;
        }
        worst = worst.max(rel(&spherical_cauchy_formula(&f, &y, &rule)?, &f.eval(&y)));
        tested += 1;
    }
    r.push(Check::new("spherical Cauchy formula", worst, p.tol(DEFAULT_TOLERANCES.spherical_cauchy)));
    Ok(r)
}

fn random_generator(rng: &mut ChaCha8Rng, n: usize) -> Generator {
    match rng.gen_range(0..4) {
        0 => Generator::Translation(ball_point(rng, n, 1.0)),
        1 => Generator::Dilation(rng.gen_range(0.5..2.0)),
        2 => Generator::Rotation(unit_vector(rng, n), unit_vector(rng, n)),
        _ => Generator::Inversion,
    }
}

fn moebius(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 5)?;
    let mut r = p.report("moebius", false, true);
    let mut rng = p.rng();
    let n = p.n;
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < p.count(200) {
        let k = rng.gen_range(1..=5);
        let gens: Vec<Generator> = (0..k).map(|_| random_generator(&mut rng, n)).collect();
        let m = VahlenMatrix::from_generators(n, &gens)?;
        let (x, y) = (ball_point(&mut rng, n, 2.0), ball_point(&mut rng, n, 2.0));
        match kernel_covariance_residual(&m, &x, &y) {
            Ok(v) => {
                worst = worst.max(v);
                done += 1;
            }
            Err(Error::Pole(_)) => {}
            Err(e) => return Err(e),
        }
    }
    r.push(Check::new(format!("kernel covariance ({done} products)"), worst, p.tol(DEFAULT_TOLERANCES.covariance)));
    let mut idx = vec![0u32; n - 1];
    idx[0] = 1;
    let p1 = fueter_polynomial(&MultiIndex(idx))?;
    let np1 = NumericPoly::new(&p1);
    let mut v = vec![0.3; n];
    v[0] = -0.7;
    let gens = [
        Generator::Translation(v.clone()),
        Generator::Dilation(1.7),
        Generator::Rotation(v, vec![0.1; n]),
        Generator::Inversion,
    ];
    let mut fd: f64 = 0.0;
    for g in gens {
        let m = VahlenMatrix::generator(n, g)?;
        let pb = pullback(&m, |y: &[f64]| np1.eval(y));
        let mut tested = 0;
        while tested < 3 {
            let x = ball_point(&mut rng, n, 1.5);
            if m.denominator_norm(&x).map_or(true, |d| d < 0.2) {
                continue;
            }
            let h = |y: &[f64]| pb.eval(y).expect("away from poles");
            fd = fd.max(dirac_residual(&h, &x));
            tested += 1;
        }
    }
    r.push(Check::new("pullback monogenicity (each generator)", fd, p.tol(DEFAULT_TOLERANCES.pullback)));
    let cay = cayley_matrix(n)?;
    let mut c = vec![0.0; n];
    c[n - 1] = 0.5;
    // Converges slowly near the pole, so quick mode does not coarsen it.
    let rule = sphere_rule(n, &c, 0.7, p.resolution.max(DEFAULT_RESOLUTION))?;
    let x1 = CliffordPolynomial::var(n, VariableKind::Vector, 1);
    let f = BoundaryDensity::from_polynomial(&(&x1 + &p1));
    let g = BoundaryDensity::from_polynomial(&(&x1 * &x1));
    r.push(Check::new(
        "change of variables (Cayley)",
        change_of_variables_residual(&cay, &f, &g, &rule)?,
        p.tol(DEFAULT_TOLERANCES.change_of_variables),
    ));
    let ext = ck_on_sphere(&p1)?;
    let mut ck: f64 = 0.0;
    for _ in 0..p.count(10) {
        let s = unit_vector(&mut rng, n);
        ck = ck.max(rel(&ext.eval(&s)?, &p1.evaluate_f64(&s)));
    }
    r.push(Check::new("sphere CK reproduces P₁", ck, p.tol(DEFAULT_TOLERANCES.sphere_ck)));
    Ok(r)
}

fn planewave(p: &SuiteParams) -> Result<Report> {
    p.require_n(3, 8)?;
    let mut r = p.report("planewave", false, false);
    let mut rng = p.rng();
    let n = p.n;
    let mut z = vec![rational(0, 1); n - 1];
    z[0] = rational(3, 5);
    z[1] = rational(4, 5);
    let (pp, pm) = (projector_exact(&z, WaveSign::Plus)?, projector_exact(&z, WaveSign::Minus)?);
    let ok = &pp * &pp == pp && &pm * &pm == pm && (&pp * &pm).is_zero() && (&pm * &pp).is_zero() && &pp + &pm == Multivector::one(n);
    r.push(Check::exact("p± idempotent, complementary, orthogonal (exact)", ok));
    let mut fd: f64 = 0.0;
    for sign in [WaveSign::Plus, WaveSign::Minus] {
        for _ in 0..p.count(4) {
            let zeta: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let w = plane_wave(&zeta, sign)?;
            let mut x = ball_point(&mut rng, n, 0.5);
            x[n - 1] = sign.value() * rng.gen_range(0.1..0.5);
            let f = |y: &[f64]| w.eval(y).expect("finite point");
            let d = dirac_with(&f, &x, 1e-3, Stencil::Fourth);
            fd = fd.max(d.norm() / f(&x).norm().max(1e-300));
        }
    }
    r.push(Check::new("D e± = 0 (finite differences)", fd, p.tol(DEFAULT_TOLERANCES.finite_difference)));
    let mut lap: f64 = 0.0;
    for dim in [3usize, 4, 5] {
        for _ in 0..p.count(20) {
            let (a, b) = (rng.gen_range(-3.0..3.0), rng.gen_range(0.5..3.0));
            let (q, c): (Complex64, Complex64) = laplace_planewave_identity(dim, a, b)?;
            lap = lap.max((q - c).norm() / c.norm());
        }
    }
    r.push(Check::new("Laplace/plane-wave identity, n = 3, 4, 5", lap, p.tol(DEFAULT_TOLERANCES.laplace)));
    Ok(r)
}

fn periodic(p: &SuiteParams) -> Result<Report> {
    p.require_n(2, 6)?;
    let mut r = p.report("periodic", false, false);
    let mut rng = p.rng();
    let n = p.n;
    let k = n.min(2);
    for l in 0..=k {
        let x = ball_point(&mut rng, n, 0.4);
        let y = ball_point(&mut rng, n, 0.4);
        let base = periodic_kernel_cot(k, l, &x, &y, 12)?;
        let mut worst_ratio: f64 = 0.0;
        for j in 0..k {
            let mut xs = x.clone();
            xs[j] += 1.0;
            let shifted = periodic_kernel_cot(k, l, &xs, &y, 12)?;
            let expected = if j < l { base.value.scale(&-1.0) } else { base.value.clone() };
            let bound = base.tail_bound.max(shifted.tail_bound);
            let res = shifted.value.dist(&expected);
            worst_ratio = worst_ratio.max(if res == 0.0 { 0.0 } else { res / bound });
        }
        r.push(Check::new(format!("cot_({k},{l}) shift residual / tail bound"), worst_ratio, 1.0));
    }
    let mut fd: f64 = 0.0;
    let y = ball_point(&mut rng, n, 1.0);
    for _ in 0..p.count(4) {
        let x = ball_point(&mut rng, n, 1.0);
        let f = |q: &[f64]| dilation_kernel(q, &y, 30).expect("off the orbit").value;
        fd = fd.max(dirac_residual(&f, &x));
    }
    r.push(Check::new("dilation kernel monogenic (finite differences)", fd, p.tol(DEFAULT_TOLERANCES.finite_difference)));
    Ok(r)
}
