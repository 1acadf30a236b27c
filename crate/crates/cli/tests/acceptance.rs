//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use tempfile::tempdir;

use common::{code, fixture, path_str, run, without_timing};
use tracegep::checks::{
    all_hold, check_m_spectrum, constrained_bound, haemers_interlace, perspective_check,
    psd_von_neumann, von_neumann,
};
use tracegep::linalg::max_principal_angle;
use tracegep::objective::{perspective_radius, Objective};
use tracegep::random::{
    gaussian_matrix, gep_with_spectrum, heavy_scale, orthogonal, orthonormal_columns, pd, psd,
    seeded, symmetric, uniform_matrix, with_spectrum, InstanceRng,
};
use tracegep::{
    ascend, b_orthonormalize, solve_dense, sym_eig, top_k, AscentConfig, GepProblem, Matrix,
};

const ORACLE_RESIDUAL_TOL: f64 = 1e-8;
const ORACLE_ORTHO_TOL: f64 = 1e-8;
const ORACLE_TIME: Duration = Duration::from_secs(10);
const INEQUALITY_SLACK: f64 = 1e-9;
const CERTIFIED_ANGLE: f64 = 1e-3;
const UNCONSTRAINED_SLACK: f64 = 1e-6;
const MAXIMUM_TOL: f64 = 1e-8;
const RECOVERY_H_TOL: f64 = 1e-6;
const RECOVERY_ANGLE_TOL: f64 = 1e-4;
const RECOVERY_ORTHO_TOL: f64 = 1e-4;
const RECOVERY_TIME: Duration = Duration::from_secs(1);
const RECOVERY_MAX_ITERS: usize = 50_000;
const BOUND_SLACK: f64 = 1e-8;
const DEGENERATE_H_TOL: f64 = 1e-8;
const DEGENERATE_GRAM_GAP: f64 = 0.1;
const FD_REL_TOL: f64 = 1e-5;
const M_SPECTRUM_TOL: f64 = 1e-9;
const PROPAGATION_TOL: f64 = 1e-7;
const IDENTITY_TOL: f64 = 1e-7;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn spectral_norm(m: &Matrix) -> f64 {
    let e = sym_eig(m).expect("symmetric");
    e.max().abs().max(e.min().abs())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (mut worst_res, mut worst_ortho) = (0.0f64, 0.0f64);
    for seed in 0..500u64 {
        let mut rng = seeded(seed);
        let d = 1 + (seed % 12) as usize;
        let a = symmetric(d, &mut rng).scale(heavy_scale(2.0, &mut rng));
        let cond = heavy_scale(1.5, &mut rng)
            .max(1.0 / heavy_scale(1.5, &mut rng))
            .max(1.0);
        let b = pd(d, cond * cond, &mut rng).scale(heavy_scale(1.0, &mut rng));
        let p = GepProblem::new(a, b).unwrap();
        let sol = solve_dense(&p).unwrap();
        let scale = 1.0 + spectral_norm(p.a()) + spectral_norm(p.b());
        worst_res = worst_res.max(sol.max_residual(&p) / scale);
        worst_ortho = worst_ortho.max(sol.b_orthonormality_error(&p));
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst_res <= ORACLE_RESIDUAL_TOL && worst_ortho <= ORACLE_ORTHO_TOL && elapsed < ORACLE_TIME,
        format!(
            "500 instances, max scaled residual {worst_res:.2e}, max B-orthonormality error {worst_ortho:.2e}, {:.2}s",
            elapsed.as_secs_f64()
        ),
    )
}

/// A top-k frame with one column turned by `theta` towards a bottom
/// eigenvector, in B-orthonormal coordinates.
fn near_miss(sol: &tracegep::GepSolution, k: usize, theta: f64, rng: &mut InstanceRng) -> Matrix {
    let d = sol.dim();
    let mut w = sol.eigenvectors.columns(0, k);
    let j = rng.random_range(0..k);
    let m = rng.random_range(k..d);
    let (top, bottom) = (sol.eigenvectors.column(j), sol.eigenvectors.column(m));
    let turned: Vec<f64> = top
        .iter()
        .zip(&bottom)
        .map(|(t, b)| theta.cos() * t + theta.sin() * b)
        .collect();
    w.set_column(j, &turned);
    &w * &orthogonal(k, rng)
}

fn criterion_2() -> Outcome {
    let mut rng = seeded(2);
    let mut worst = f64::INFINITY;
    let (mut random_certified, mut false_pos, mut holds) = (0usize, 0usize, true);
    for _ in 0..10_000 {
        let d = rng.random_range(1..=10);
        let k = rng.random_range(1..=d);
        let p = GepProblem::new(symmetric(d, &mut rng), pd(d, 10.0, &mut rng)).unwrap();
        let w = b_orthonormalize(p.b(), &gaussian_matrix(d, k, &mut rng)).unwrap();
        let r = constrained_bound(&p, &w, k).unwrap();
        holds &= all_hold(&r);
        worst = worst.min(r[0].relative_residual());
        let sol = solve_dense(&p).unwrap();
        let top = top_k(&sol, k).unwrap();
        if top.unique && max_principal_angle(&w, &top.basis).unwrap() >= CERTIFIED_ANGLE {
            random_certified += 1;
            false_pos += usize::from(r[0].is_equality());
        }
    }

    let (mut top_frames, mut missed) = (0usize, 0usize);
    let (mut near, mut near_false_pos) = (0usize, 0usize);
    for _ in 0..2_000 {
        let d = rng.random_range(2..=10);
        let k = rng.random_range(1..d);
        let spectrum = tracegep::random::gapped_spectrum(d, 0.5, 0.5);
        let p = gep_with_spectrum(&spectrum, 2.0, &mut rng).unwrap();
        let sol = solve_dense(&p).unwrap();

        let frame = &top_k(&sol, k).unwrap().basis * &orthogonal(k, &mut rng);
        let r = constrained_bound(&p, &frame, k).unwrap();
        top_frames += 1;
        missed += usize::from(!r[0].is_equality());
        holds &= all_hold(&r);

        let theta = rng.random_range(2e-3..0.1);
        let w = near_miss(&sol, k, theta, &mut rng);
        let angle = max_principal_angle(&w, &top_k(&sol, k).unwrap().basis).unwrap();
        if angle >= CERTIFIED_ANGLE {
            near += 1;
            let r = constrained_bound(&p, &w, k).unwrap();
            holds &= all_hold(&r);
            worst = worst.min(r[0].relative_residual());
            near_false_pos += usize::from(r[0].is_equality());
        }
    }
    Outcome::new(
        holds && worst >= -INEQUALITY_SLACK && missed == 0 && false_pos == 0 && near_false_pos == 0,
        format!(
            "10000 random frames (min relative residual {worst:.2e}); equality on {}/{top_frames} top-k frames; \
             false positives {false_pos}/{random_certified} random and {near_false_pos}/{near} near-miss certified frames",
            top_frames - missed
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = seeded(3);
    let (mut worst_excess, mut worst_max) = (f64::NEG_INFINITY, 0.0f64);
    for _ in 0..10_000 {
        let d = rng.random_range(1..=10);
        let k = rng.random_range(1..=d);
        let p = GepProblem::new(psd(d, &mut rng), pd(d, 10.0, &mut rng)).unwrap();
        let sol = solve_dense(&p).unwrap();
        let obj = Objective::new(p, k).unwrap();
        let w = gaussian_matrix(d, k, &mut rng).scale(heavy_scale(3.0, &mut rng));
        let h = obj.h_value(&w).unwrap();
        let excess = (h - sol.top_sum(k)) / (sol.abs_sum().max(f64::MIN_POSITIVE));
        worst_excess = worst_excess.max(excess);
        let at_top = obj.h_value(&top_k(&sol, k).unwrap().basis).unwrap();
        worst_max = worst_max.max((at_top - sol.top_sum(k)).abs());
    }
    Outcome::new(
        worst_excess <= UNCONSTRAINED_SLACK && worst_max <= MAXIMUM_TOL,
        format!(
            "10000 frames at scales 1e-3..1e3, max (h - sum)/sum|lambda| {worst_excess:.2e}; \
             max |h(top-k) - sum| {worst_max:.2e}"
        ),
    )
}

/// Spectrum with `λ_k − λ_{k+1} ≥ 0.5` and `λ_k ≥ 0.5`.
fn recovery_spectrum(d: usize, k: usize, rng: &mut InstanceRng) -> Vec<f64> {
    let mut bottom: Vec<f64> = (k..d).map(|_| rng.random_range(0.0..2.0)).collect();
    bottom.sort_by(|a, b| b.total_cmp(a));
    let mut level = bottom.first().copied().unwrap_or(0.0) + rng.random_range(0.5..1.5);
    let mut top = vec![level];
    for _ in 1..k {
        level += rng.random_range(0.0..1.0);
        top.push(level);
    }
    top.reverse();
    top.extend(bottom);
    top
}

fn criterion_4() -> Outcome {
    let (d, k) = (10, 3);
    let mut pass = true;
    let (mut worst_h, mut worst_angle, mut worst_ortho, mut worst_bound) =
        (0.0f64, 0.0f64, 0.0f64, f64::NEG_INFINITY);
    let (mut slowest, mut max_iters) = (Duration::ZERO, 0usize);
    for seed in 0..100u64 {
        let mut rng = seeded(seed);
        let spectrum = recovery_spectrum(d, k, &mut rng);
        let b_cond = rng.random_range(1.0..10.0);
        let p = gep_with_spectrum(&spectrum, b_cond, &mut rng).unwrap();
        let sol = solve_dense(&p).unwrap();
        let obj = Objective::new(p, k).unwrap();
        let cfg = AscentConfig {
            max_iters: Some(RECOVERY_MAX_ITERS),
            ..AscentConfig::with_seed(seed)
        };
        let start = Instant::now();
        let r = ascend(&obj, &cfg).unwrap();
        let elapsed = start.elapsed();
        let oracle = sol.top_sum(k);
        let angle = max_principal_angle(&r.w, &top_k(&sol, k).unwrap().basis).unwrap();
        let ortho =
            r.w.t_mul(&(obj.problem().b() * &r.w))
                .max_abs_diff(&Matrix::identity(k));
        worst_h = worst_h.max((r.terminal_h() - oracle).abs());
        worst_angle = worst_angle.max(angle);
        worst_ortho = worst_ortho.max(ortho);
        worst_bound = worst_bound.max(r.terminal_h() - oracle);
        slowest = slowest.max(elapsed);
        max_iters = max_iters.max(r.iterations);
        pass &= r.converged;
    }
    pass &= worst_h <= RECOVERY_H_TOL
        && worst_angle <= RECOVERY_ANGLE_TOL
        && worst_ortho <= RECOVERY_ORTHO_TOL
        && worst_bound <= BOUND_SLACK
        && slowest < RECOVERY_TIME;
    Outcome::new(
        pass,
        format!(
            "100 runs, max |h - sum| {worst_h:.2e}, max angle {worst_angle:.2e}, max |WtBW - I| {worst_ortho:.2e}, \
             max h - sum {worst_bound:.2e}, at most {max_iters} iterations, slowest {:.3}s",
            slowest.as_secs_f64()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = seeded(5);
    let (mut worst_h, mut min_gram, mut worst_grad) = (0.0f64, f64::INFINITY, 0.0f64);
    let trials = 500;
    for _ in 0..trials {
        let d = rng.random_range(3..=10);
        let k = rng.random_range(2..d);
        let q = rng.random_range(1..k);
        let mut spectrum: Vec<f64> = (0..d)
            .map(|i| {
                if i < q {
                    rng.random_range(0.5..3.0)
                } else {
                    0.0
                }
            })
            .collect();
        spectrum.sort_by(|a, b| b.total_cmp(a));
        let p = gep_with_spectrum(&spectrum, 5.0, &mut rng).unwrap();
        let sol = solve_dense(&p).unwrap();
        let star = top_k(&sol, k).unwrap().basis;

        let z = k - q;
        let g = loop {
            let g = &Matrix::identity(z) + &gaussian_matrix(z, z, &mut rng).scale(0.5);
            if g.t_mul(&g).max_abs_diff(&Matrix::identity(z)) > 2.0 * DEGENERATE_GRAM_GAP {
                break g;
            }
        };
        let phi = Matrix::from_fn(k, k, |i, j| match (i < q, j < q) {
            (true, true) => f64::from(u8::from(i == j)),
            (false, false) => g[(i - q, j - q)],
            _ => 0.0,
        });
        let w = &star * &phi;
        let obj = Objective::new(p, k).unwrap();
        let h = obj.h_value(&w).unwrap();
        let gram = w
            .t_mul(&(obj.problem().b() * &w))
            .max_abs_diff(&Matrix::identity(k));
        let grad = obj.h_gradient(&w).unwrap().norm_max() / (1.0 + obj.problem().a().norm_max());
        worst_h = worst_h.max((h - sol.top_sum(k)).abs());
        min_gram = min_gram.min(gram);
        worst_grad = worst_grad.max(grad);
    }
    Outcome::new(
        worst_h <= DEGENERATE_H_TOL && min_gram > DEGENERATE_GRAM_GAP && worst_grad <= 1e-7,
        format!(
            "{trials} rank-deficient instances, max |h - sum| {worst_h:.2e}, min |WtBW - I| {min_gram:.2e}, \
             max scaled gradient {worst_grad:.2e}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = seeded(6);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let d = rng.random_range(1..=10);
        let k = rng.random_range(1..=d);
        let p = GepProblem::new(symmetric(d, &mut rng), pd(d, 10.0, &mut rng)).unwrap();
        let obj = Objective::new(p, k).unwrap();
        let w = gaussian_matrix(d, k, &mut rng).scale(heavy_scale(1.0, &mut rng));
        let g = obj.h_gradient(&w).unwrap();
        let step = 1e-5 * (1.0 + w.norm_max());
        let fd = Matrix::from_fn(d, k, |i, j| {
            let (mut plus, mut minus) = (w.clone(), w.clone());
            plus[(i, j)] += step;
            minus[(i, j)] -= step;
            (obj.h_value(&plus).unwrap() - obj.h_value(&minus).unwrap()) / (2.0 * step)
        });
        worst = worst.max((&fd - &g).norm_fro() / g.norm_fro());
    }
    Outcome::new(
        worst <= FD_REL_TOL,
        format!("200 pairs, max relative error {worst:.2e}"),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(7);
    let (mut worst_vn, mut worst_psd) = (f64::INFINITY, f64::INFINITY);
    let mut holds = true;
    for _ in 0..10_000 {
        let rows = rng.random_range(1..=8);
        let cols = rng.random_range(1..=8);
        let x = gaussian_matrix(rows, cols, &mut rng).scale(heavy_scale(3.0, &mut rng));
        let y = gaussian_matrix(rows, cols, &mut rng).scale(heavy_scale(3.0, &mut rng));
        let r = von_neumann(&x, &y).unwrap();
        holds &= all_hold(&r);
        worst_vn = worst_vn.min(r[0].relative_residual());

        let d = rng.random_range(1..=8);
        let a = psd(d, &mut rng).scale(heavy_scale(3.0, &mut rng));
        let m = symmetric(d, &mut rng).scale(heavy_scale(3.0, &mut rng));
        let r = psd_von_neumann(&a, &m).unwrap();
        holds &= all_hold(&r);
        worst_psd = worst_psd.min(r[0].relative_residual());
    }

    let (mut shared, mut shared_ok) = (0usize, 0usize);
    for _ in 0..1_000 {
        let rows = rng.random_range(1..=6);
        let cols = rng.random_range(1..=6);
        let q = rows.min(cols);
        let (u, v) = (
            orthonormal_columns(rows, q, &mut rng),
            orthonormal_columns(cols, q, &mut rng),
        );
        let mut descending = |lo: f64| {
            let mut s: Vec<f64> = (0..q).map(|_| rng.random_range(lo..3.0)).collect();
            s.sort_by(|a, b| b.total_cmp(a));
            s
        };
        let (sx, sy) = (descending(0.0), descending(0.0));
        let build = |s: &[f64]| &Matrix::from_fn(rows, q, |i, j| u[(i, j)] * s[j]) * &v.transpose();
        let r = von_neumann(&build(&sx), &build(&sy)).unwrap();
        shared += 1;
        shared_ok += usize::from(r[0].is_equality() && r.len() > 1 && all_hold(&r));

        let d = rng.random_range(1..=6);
        let frame = orthogonal(d, &mut rng);
        let mut la: Vec<f64> = (0..d).map(|_| rng.random_range(0.0..3.0)).collect();
        let mut lm: Vec<f64> = (0..d).map(|_| rng.random_range(-3.0..3.0)).collect();
        la.sort_by(|a, b| b.total_cmp(a));
        lm.sort_by(|a, b| b.total_cmp(a));
        let r = psd_von_neumann(&with_spectrum(&frame, &la), &with_spectrum(&frame, &lm)).unwrap();
        shared += 1;
        shared_ok += usize::from(r[0].is_equality() && r.len() > 1 && all_hold(&r));
    }

    let mut worst_mu = 0.0f64;
    for _ in 0..1_000 {
        let d = rng.random_range(2..=8);
        let k = rng.random_range(1..=d);
        let w = uniform_matrix(d, k, &mut rng);
        let r = check_m_spectrum(&w).unwrap();
        holds &= all_hold(&r);
        worst_mu = worst_mu.max(r[0].lhs);
    }
    Outcome::new(
        holds
            && worst_vn >= -INEQUALITY_SLACK
            && worst_psd >= -INEQUALITY_SLACK
            && shared_ok == shared
            && worst_mu <= M_SPECTRUM_TOL,
        format!(
            "min relative residual {worst_vn:.2e} (10000 rectangular) and {worst_psd:.2e} (10000 PSD); \
             {shared_ok}/{shared} shared-frame equalities verified; max |mu - (2d^2 - d^4)| {worst_mu:.2e}"
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = seeded(8);
    let mut holds = true;
    for _ in 0..1_000 {
        let d = rng.random_range(1..=9);
        let k = rng.random_range(1..=d);
        let a = symmetric(d, &mut rng).scale(heavy_scale(2.0, &mut rng));
        holds &= all_hold(&haemers_interlace(&a, &orthonormal_columns(d, k, &mut rng)).unwrap());
    }
    let (mut propagated, mut worst) = (0usize, 0.0f64);
    for _ in 0..1_000 {
        let d = rng.random_range(1..=9);
        let k = rng.random_range(1..=d);
        let a = symmetric(d, &mut rng);
        let s = &sym_eig(&a).unwrap().eigenvectors.columns(0, k) * &orthogonal(k, &mut rng);
        let r = haemers_interlace(&a, &s).unwrap();
        let residuals: Vec<f64> = r
            .iter()
            .filter(|c| c.name.starts_with("haemers.eigenvector"))
            .map(|c| c.lhs)
            .collect();
        if residuals.len() == k && all_hold(&r) {
            propagated += 1;
        }
        worst = residuals.into_iter().fold(worst, f64::max);
    }
    Outcome::new(
        holds && propagated == 1_000 && worst <= PROPAGATION_TOL,
        format!("1000 random compressions hold; {propagated}/1000 all-equality frames propagate, max residual {worst:.2e}"),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = seeded(9);
    let mut holds = true;
    let (mut outside, mut worst_outside, mut equalities, mut worst_dev) =
        (0usize, f64::NEG_INFINITY, 0usize, 0.0f64);
    let mut record = |lambda: &Matrix, m: &Matrix, holds: &mut bool| {
        let r = perspective_check(lambda, m).unwrap();
        *holds &= all_hold(&r);
        if let Some(c) = r.iter().find(|c| c.name == "perspective.outside-radius") {
            outside += 1;
            worst_outside = worst_outside.max(c.lhs);
        }
        if r[0].is_equality() {
            equalities += 1;
            worst_dev = worst_dev.max(m.max_abs_diff(&Matrix::identity(m.rows())));
        }
    };
    for t in 0..10_000 {
        let p = rng.random_range(1..=6);
        let diag: Vec<f64> = (0..p).map(|_| rng.random_range(0.1..10.0)).collect();
        let lambda = Matrix::from_diag(&diag);
        let radius = perspective_radius(&lambda).unwrap();
        let m = match t % 4 {
            0 => psd(p, &mut rng).scale(heavy_scale(2.0, &mut rng)),
            1 => {
                let spectrum: Vec<f64> = (0..p)
                    .map(|_| rng.random_range(0.0..3.0 * radius))
                    .collect();
                with_spectrum(&orthogonal(p, &mut rng), &spectrum)
            }
            2 => {
                let mut spectrum: Vec<f64> =
                    (0..p).map(|_| rng.random_range(0.0..radius)).collect();
                spectrum[0] = radius * rng.random_range(1.0..2.0);
                with_spectrum(&orthogonal(p, &mut rng), &spectrum)
            }
            _ => {
                let eps = 10f64.powf(rng.random_range(-2.3..-0.5));
                let spectrum: Vec<f64> = (0..p)
                    .map(|_| 1.0 + if rng.random_bool(0.5) { eps } else { -eps })
                    .collect();
                with_spectrum(&orthogonal(p, &mut rng), &spectrum)
            }
        };
        record(&lambda, &m, &mut holds);
        if t % 10 == 0 {
            record(&lambda, &Matrix::identity(p), &mut holds);
        }
    }
    Outcome::new(
        holds && worst_dev <= IDENTITY_TOL && equalities > 0,
        format!(
            "bound holds; {outside} samples outside R*, max h there {worst_outside:.2e}; \
             {equalities} equalities, max |M - I| among them {worst_dev:.2e}"
        ),
    )
}

fn criterion_10() -> Outcome {
    let dir = tempdir().unwrap();
    let file = |n: &str| dir.path().join(n);
    let (a, b) = (file("a.txt"), file("b.txt"));
    let gen = || {
        run(&[
            "gen",
            "--d",
            "10",
            "--k",
            "3",
            "--spectrum",
            "gap:0.5",
            "--b-cond",
            "4",
            "--seed",
            "7",
            "--a",
            path_str(&a),
            "--b",
            path_str(&b),
        ])
    };
    let g1 = gen();
    let files1 = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let g2 = gen();
    let files2 = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let gen_same = code(&g1) == 0 && g1.stdout == g2.stdout && files1 == files2;

    let solve = || {
        run(&[
            "solve",
            "--a",
            path_str(&a),
            "--b",
            path_str(&b),
            "--k",
            "3",
            "--seed",
            "7",
            "--max-iters",
            "50000",
        ])
    };
    let (s1, s2) = (solve(), solve());
    let solve_same = code(&s1) == 0 && without_timing(&s1.stdout) == without_timing(&s2.stdout);

    let check = || run(&["check", "--random", "50", "--suite", "all", "--seed", "7"]);
    let (c1, c2) = (check(), check());
    let check_same = code(&c1) == 0 && c1.stdout == c2.stdout;

    let f = |n: &str| fixture(n).to_str().unwrap().to_owned();
    let cases: Vec<(Vec<String>, i32)> = vec![
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("diag321.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
                "--max-iters".into(),
                "20000".into(),
            ],
            0,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("diag321.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
                "--max-iters".into(),
                "2".into(),
            ],
            2,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("diag321.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
                "--step".into(),
                "10".into(),
            ],
            2,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("diag321.txt"),
                "--b".into(),
                f("not_pd.txt"),
                "--k".into(),
                "2".into(),
            ],
            1,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("asymmetric.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
            ],
            1,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("bad_token.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
            ],
            1,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("short_row.txt"),
                "--b".into(),
                f("eye3.txt"),
                "--k".into(),
                "2".into(),
            ],
            1,
        ),
        (
            vec![
                "solve".into(),
                "--a".into(),
                f("diag321.txt"),
                "--b".into(),
                f("eye2.txt"),
                "--k".into(),
                "2".into(),
            ],
            1,
        ),
        (
            vec![
                "check".into(),
                "--suite".into(),
                "vonneumann".into(),
                "--a".into(),
                f("eye2.txt"),
                "--b".into(),
                f("eye2.txt"),
            ],
            0,
        ),
        (
            vec![
                "check".into(),
                "--suite".into(),
                "svd-eig".into(),
                "--a".into(),
                f("asymmetric.txt"),
            ],
            1,
        ),
        (
            vec![
                "check".into(),
                "--random".into(),
                "100".into(),
                "--suite".into(),
                "all".into(),
                "--seed".into(),
                "1".into(),
            ],
            0,
        ),
        (
            vec![
                "gen".into(),
                "--d".into(),
                "3".into(),
                "--spectrum".into(),
                "1,2,3".into(),
                "--a".into(),
                path_str(&file("x")).into(),
                "--b".into(),
                path_str(&file("y")).into(),
            ],
            1,
        ),
    ];
    let mut contract = 0;
    for (args, expected) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = code(&run(&args));
        if got == *expected {
            contract += 1;
        } else {
            eprintln!("exit-code mismatch for {args:?}: expected {expected}, got {got}");
        }
    }
    Outcome::new(
        gen_same && solve_same && check_same && contract == cases.len(),
        format!(
            "gen identical: {gen_same}, solve identical: {solve_same}, check identical: {check_same}; \
             exit codes {contract}/{} as documented",
            cases.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle correctness", criterion_1),
        ("constrained bound", criterion_2),
        ("unconstrained bound", criterion_3),
        ("solver recovery", criterion_4),
        ("degenerate equality", criterion_5),
        ("gradient correctness", criterion_6),
        ("von Neumann suite", criterion_7),
        ("interlacing suite", criterion_8),
        ("perspective lemma", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        failed += usize::from(!outcome.pass);
        println!(
            "{} criterion {:>2} {title}: {} [{:.2}s]",
            if outcome.pass { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
