//! Acceptance suite: one line per criterion, every tolerance pinned.
//!
//! Runs without the libtest harness so the lines always print. The process
//! fails on any criterion failure that is not the documented corollary
//! misprint set of criterion 7, whose exact shape is itself asserted.

use std::f64::consts::{LN_2, PI};
use std::time::Instant;

use lerchlab::closedform::{
    binom, eval_corollary, eval_theorem, has_corollary, lemma5_value, validate_params, Family,
    FamilyTag, Params,
};
use lerchlab::harness::{run_sweep, Status, SweepSpec};
use lerchlab::oracle::{
    accel_alternating, gen_harmonic, integrate_unit, pv_polylog_re, quad_halfline, quad_unit,
    sum_bbp, HarmonicKind, Integrand, QuadConfig, SumConfig,
};
use lerchlab::specfun::{
    euler_numbers, hurwitz_zeta, lerch_phi, polylog, polylog_re_recip, reduced_constant,
    ConstKind, LerchPoint, Rational, Sign,
};
use num_traits::ToPrimitive;

/// Catalan's constant.
const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

struct Line {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff.abs() / scale.abs().max(1.0)
}

fn signs() -> [Sign; 2] {
    [Sign::Minus, Sign::Plus]
}

fn phi(c: Sign, q: u32, num: u64, den: u64) -> f64 {
    let alpha = Rational::new(num, den).unwrap();
    lerch_phi(LerchPoint::new(c, q, alpha).unwrap()).unwrap().value
}

fn konst(kind: ConstKind, s: u32) -> f64 {
    reduced_constant(kind, s).unwrap().value
}

fn lattice(families: &[Family], pq_max: u32, n_max: u32) -> Vec<(Family, Params)> {
    let mut out = Vec::new();
    for &f in families {
        for p in 1..pq_max {
            for q in 1..=pq_max - p {
                for n in 1..=n_max {
                    for a in signs() {
                        for b in signs() {
                            let pr = Params::new(p, q, n, a, b);
                            if validate_params(f, pr).reason.is_none() {
                                out.push((f, pr));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn c1_lattice() -> Line {
    let mut spec = SweepSpec::new(Family::all(), 6, 6, 3, 1e-8).unwrap();
    spec.pq_max = Some(7);
    spec.threads = Some(1);
    let start = Instant::now();
    let reports = run_sweep(&spec).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let valid: Vec<_> = reports.iter().filter(|r| r.status != Status::SkippedInvalid).collect();
    let count = |s: Status| valid.iter().filter(|r| r.status == s).count();
    let max_rel = valid.iter().filter_map(|r| r.rel_err).fold(0.0, f64::max);
    let suspect = count(Status::SuspectIdentity);
    // no per-case arbitration notes exist, so any suspect case fails
    let pass = count(Status::Pass) == valid.len() && secs <= 600.0;
    Line {
        id: 1,
        title: "full-lattice conformance, rel_err <= 1e-8, p+q <= 7, n <= 3, <= 600 s single-threaded",
        pass,
        detail: format!(
            "{} valid cases, {} pass, {} fail, {} suspect, {} nonconverged, max rel_err {:.1e}, {:.1} s",
            valid.len(),
            count(Status::Pass),
            count(Status::Fail),
            suspect,
            count(Status::Nonconverged),
            max_rel,
            secs
        ),
    }
}

fn c2_catalan_log2() -> Line {
    let pr = Params::from_ints(1, 1, 1, -1, 1);
    let v = eval_theorem(Family::plain(FamilyTag::BbpO), pr).unwrap().value;
    let want = CATALAN - PI / 2.0 * LN_2;
    let d = (v - want).abs();
    Line {
        id: 2,
        title: "BBP_O at p=q=n=1, a=-1, b=1 equals G - (pi/2) ln 2, <= 1e-10",
        pass: d <= 1e-10,
        detail: format!("v = {v:.15}, diff {d:.1e}"),
    }
}

fn c3_euler() -> Line {
    let f = Family::plain(FamilyTag::EulerH);
    let z3 = konst(ConstKind::Zeta, 3);
    let v1 = eval_theorem(f, Params::from_ints(1, 2, 1, 1, 1)).unwrap().value;
    let v2 = eval_theorem(f, Params::from_ints(1, 2, 1, -1, 1)).unwrap().value;
    let (d1, d2) = ((v1 - 2.0 * z3).abs(), (v2 + 5.0 / 8.0 * z3).abs());
    Line {
        id: 3,
        title: "classical Euler sums 2 zeta(3) and -(5/8) zeta(3), <= 1e-10",
        pass: d1 <= 1e-10 && d2 <= 1e-10,
        detail: format!("diffs {d1:.1e}, {d2:.1e}"),
    }
}

fn c4_inversion_pv() -> Line {
    let cfg = QuadConfig::default();
    let mut worst: f64 = 0.0;
    for p in 1..=5 {
        for x in [0.1, 0.25, 0.5, 0.75] {
            let a = polylog_re_recip(p, Sign::Plus, x).unwrap().value;
            let b = pv_polylog_re(p, 1.0 / x, &cfg).unwrap().value;
            worst = worst.max((a - b).abs());
        }
    }
    Line {
        id: 4,
        title: "Re Li_p(1/x) by inversion vs principal-value quadrature, p 1..5, <= 1e-10",
        pass: worst <= 1e-10,
        detail: format!("20 points, max diff {worst:.1e}"),
    }
}

/// `Re Li_p(c/x)` straight from the integral representation; a principal
/// value when `c = +1`.
fn li_recip_quad(p: u32, c: Sign, x: f64) -> f64 {
    let tight = QuadConfig::new(1e-14, 16).unwrap();
    match c {
        Sign::Plus => pv_polylog_re(p, 1.0 / x, &tight).unwrap().value,
        Sign::Minus => {
            let z = -1.0 / x;
            let fact: f64 = (1..p).map(|k| k as f64).product();
            let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
            let v = integrate_unit(
                |t, tc| {
                    let lt = if t < 0.5 { t.ln() } else { (-tc).ln_1p() };
                    z * lt.powi(p as i32 - 1) / (1.0 - z * t)
                },
                &tight,
            )
            .unwrap()
            .value;
            sign * v / fact
        }
    }
}

fn c5_specfun() -> Line {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut check = |name: &str, worst: f64, tol: f64| {
        pass &= worst <= tol;
        notes.push(format!("{name} {worst:.1e}"));
    };

    // Φ(-1, q, α) = 2^{1-q} ζ(q, α/2) - ζ(q, α)
    let mut w: f64 = 0.0;
    for q in 2..=8u32 {
        for (n, d) in [(1, 4), (1, 3), (1, 2), (2, 3), (1, 1)] {
            let alpha = Rational::new(n, d).unwrap();
            let f = phi(Sign::Minus, q, n, d);
            let h = 2f64.powi(1 - q as i32) * hurwitz_zeta(q, alpha.halve()).unwrap().value
                - hurwitz_zeta(q, alpha).unwrap().value;
            w = w.max((f - h).abs() / f.abs());
        }
    }
    check("decomposition", w, 1e-12);

    let mut w: f64 = 0.0;
    for s in 2..=8u32 {
        let h = 2f64.powi(-(s as i32));
        for (k, v) in [
            (ConstKind::Zeta, phi(Sign::Plus, s, 1, 1)),
            (ConstKind::Eta, phi(Sign::Minus, s, 1, 1)),
            (ConstKind::Lambda, h * phi(Sign::Plus, s, 1, 2)),
            (ConstKind::Beta, h * phi(Sign::Minus, s, 1, 2)),
        ] {
            w = w.max((konst(k, s) - v).abs() / v.abs());
        }
    }
    check("reductions", w, 1e-12);

    let mut w: f64 = 0.0;
    for s in 2..=8u32 {
        let e = konst(ConstKind::Eta, s);
        w = w.max((e - (1.0 - 2f64.powi(1 - s as i32)) * konst(ConstKind::Zeta, s)).abs() / e);
    }
    check("eta/zeta bridge", w, 1e-13);

    let (w, _) = beta_odd();
    check("beta odd", w, 1e-12);

    // inversion residual against the integral representation
    let mut w: f64 = 0.0;
    for p in 1..=6u32 {
        for c in signs() {
            for x in [0.1, 0.25, 0.5, 0.75, 0.9] {
                let lx = f64::ln(x);
                let mut rhs = 0.0;
                for k in 0..=p / 2 {
                    let e = p - 2 * k;
                    let fact: f64 = (1..=e).map(|i| i as f64).product();
                    rhs += lx.powi(e as i32) / fact * phi(c, 2 * k, 1, 1);
                }
                rhs *= 2.0 * c.f();
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                let lhs = polylog(p, c.f() * x).unwrap().value + sign * li_recip_quad(p, c, x);
                w = w.max((lhs - rhs).abs());
            }
        }
    }
    check("inversion residual", w, 1e-12);

    // returned error bars cover a tight quadrature recomputation
    let tight = QuadConfig::new(1e-14, 16).unwrap();
    let mut ratio: f64 = 0.0;
    for c in signs() {
        for q in 2..=6u32 {
            for (s, r) in [(1u64, 4u64), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)] {
                let alpha = Rational::new(s, r).unwrap();
                let v = lerch_phi(LerchPoint::new(c, q, alpha).unwrap()).unwrap();
                let reference = quad_unit(&Integrand::Lemma3 { c, q, s: alpha.num(), r: alpha.den() }, &tight)
                    .unwrap();
                let fact: f64 = (1..q).map(|i| i as f64).product();
                let scale = if q % 2 == 1 { 1.0 } else { -1.0 } * fact / (alpha.den() as f64).powi(q as i32);
                let dev = (v.value - reference.value / scale).abs();
                let allowed = v.err + reference.err / scale.abs() + 4.0 * f64::EPSILON * v.value.abs();
                ratio = ratio.max(dev / allowed);
            }
        }
    }
    pass &= ratio <= 1.0;
    notes.push(format!("error bars cover recomputation (worst dev/err {ratio:.2})"));

    Line {
        id: 5,
        title: "specfun invariants: decomposition, reductions 1e-12, bridge 1e-13, inversion residual 1e-12",
        pass,
        detail: notes.join(", "),
    }
}

/// Worst deviation of β(2s+1), s = 0..4, between the library value, the
/// Euler-number closed form and the accelerated series.
fn beta_odd() -> (f64, String) {
    let table = euler_numbers(4).unwrap();
    let mut w: f64 = 0.0;
    for s in 0..=4u32 {
        let m = 2 * s + 1;
        let e = table.get(2 * s as usize).to_f64().unwrap().abs();
        let fact: f64 = (1..=2 * s).map(|i| i as f64).product();
        let closed = e / (2.0 * fact) * (PI / 2.0).powi(m as i32);
        let series = accel_alternating(|k| (2.0 * k as f64 + 1.0).powi(-(m as i32)), 40).value;
        let lib = konst(ConstKind::Beta, m);
        w = w.max((lib - closed).abs()).max((series - closed).abs());
    }
    (w, "s = 0..4".into())
}

fn c6_beta() -> Line {
    let (w, what) = beta_odd();
    Line {
        id: 6,
        title: "beta(2s+1) closed form vs series, <= 1e-12",
        pass: w <= 1e-12,
        detail: format!("{what}, max diff {w:.1e}"),
    }
}

/// `theorem - printed corollary` implied by the misprints identified in the
/// two BBP_H corollaries with b = -1, or `None` where none is expected.
fn predicted_misprint(f: Family, pr: Params) -> Option<f64> {
    if f.tag != FamilyTag::BbpH || pr.b != Sign::Minus {
        return None;
    }
    let (p, q, n) = (pr.p, pr.q, pr.n);
    let nf = n as f64;
    let mn = -nf;
    let eta = |s: u32| konst(ConstKind::Eta, s);
    match pr.a {
        Sign::Plus => {
            // printed ½(-n)^{-q} on the η·η sum and (-n)^{-p} on the η·ζ sum;
            // the theorem gives (-n)^{-q} and (-n)^{p}
            let s1: f64 = (0..=q / 2)
                .map(|j| binom(p + q - 2 * j - 1, p - 1) * eta(2 * j) * eta(p + q - 2 * j))
                .sum();
            let s2: f64 = (0..=p / 2)
                .map(|k| {
                    binom(p + q - 2 * k - 1, q - 1)
                        * nf.powi(-2 * k as i32)
                        * eta(2 * k)
                        * konst(ConstKind::Zeta, p + q - 2 * k)
                })
                .sum();
            Some(0.5 * mn.powi(-(q as i32)) * s1 + (mn.powi(p as i32) - mn.powi(-(p as i32))) * s2)
        }
        Sign::Minus if q % 2 == 0 => {
            // the first single sum stops at ⌊(q-1)/2⌋ and drops j = q/2
            let sn = if n % 2 == 0 { 1.0 } else { -1.0 };
            let phi_q = if n % 2 == 1 { konst(ConstKind::Zeta, q) } else { eta(q) };
            Some(-sn * mn.powi(-(q as i32)) * phi_q * eta(p))
        }
        Sign::Minus => None,
    }
}

fn c7_corollaries() -> (Line, bool) {
    let fams: Vec<Family> = Family::all().into_iter().filter(|&f| has_corollary(f)).collect();
    let points = lattice(&fams, 7, 3);
    let cfg = SumConfig::default();
    let mut differing = Vec::new();
    let mut explained = true;
    let mut worst_ok: f64 = 0.0;
    for &(f, pr) in &points {
        let t = eval_theorem(f, pr).unwrap().value;
        let c = eval_corollary(f, pr).unwrap().value;
        let r = rel(t - c, t);
        if r > 1e-11 {
            differing.push((f, pr));
        }
        match predicted_misprint(f, pr) {
            Some(delta) => {
                // the misprint accounts for the whole gap, and the
                // series oracle sides with the theorem
                let o = sum_bbp(f, pr, &cfg).unwrap().value;
                explained &= rel(t - c - delta, t) <= 1e-11;
                explained &= rel(o - t, t) <= 1e-8;
                explained &= r <= 1e-11 || rel(o - c, t) > 1e-8;
            }
            None => {
                worst_ok = worst_ok.max(r);
                explained &= r <= 1e-11;
            }
        }
    }
    let plus = differing.iter().filter(|(_, pr)| pr.a == Sign::Plus).count();
    let line = Line {
        id: 7,
        title: "corollary vs theorem dual path, <= 1e-11 on every lattice point",
        pass: differing.is_empty() && worst_ok <= 1e-11,
        detail: format!(
            "{} of {} points differ: BBP_H b=-1, a=+1 ({plus} points, coefficients on the eta sums) \
             and a=-1 even q ({} points, truncated upper limit); oracle agrees with the theorem on all; \
             remaining points max diff {worst_ok:.1e}",
            differing.len(),
            points.len(),
            differing.len() - plus,
        ),
    };
    (line, explained)
}

fn c8_reflection() -> Line {
    let cfg = QuadConfig::default();
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for tag in [FamilyTag::IntInf1, FamilyTag::IntInf2] {
        let f = Family::plain(tag);
        for (_, pr) in lattice(&[f], 5, 2) {
            let t = eval_theorem(f, pr).unwrap().value;
            let sign = if pr.q % 2 == 0 { 1.0 } else { -1.0 } * pr.a.f();
            let v = quad_halfline(&Integrand::Reflection { tag, params: pr }, &cfg).unwrap().value;
            worst = worst.max(rel(v - sign * t, t));
            count += 1;
        }
    }
    Line {
        id: 8,
        title: "x -> 1/x reflections of the half-line integrals, >= 10 points, <= 1e-8",
        pass: count >= 10 && worst <= 1e-8,
        detail: format!("{count} points, max rel diff {worst:.1e}"),
    }
}

fn c9_rational_halfline() -> Line {
    let cfg = QuadConfig::default();
    let pts: [(u32, u32, i64, i64, f64); 8] = [
        (2, 1, -1, -1, 0.5),
        (3, 2, -1, 1, 1.0 / 3.0),
        (2, 1, 1, -1, 0.5),
        (2, 3, 1, 1, 0.25),
        (4, 2, 1, 1, 0.7),
        (3, 1, -1, -1, 0.2),
        (1, 1, -1, 1, 0.5),
        (5, 3, -1, 1, 0.9),
    ];
    let mut worst: f64 = 0.0;
    for (q, n, a, b, y) in pts {
        let (a, b) = (Sign::from_i64(a).unwrap(), Sign::from_i64(b).unwrap());
        let want = lemma5_value(q, n, a, b, y).unwrap().value;
        let got = quad_halfline(&Integrand::Lemma5 { q, n, a, b, y }, &cfg).unwrap().value;
        worst = worst.max((got - want).abs());
    }
    Line {
        id: 9,
        title: "lemma5_value vs combined-integrand quadrature, >= 6 points incl. a=+1 q=2, <= 1e-8",
        pass: worst <= 1e-8,
        detail: format!("{} points, max diff {worst:.1e}", pts.len()),
    }
}

fn c10_cot_and_generating_function() -> Line {
    // -2c Σ_{n<=30} Φ(c,2n,1) s^{2n-1} against π cot(πs) or π csc(πs)
    let mut w2: f64 = 0.0;
    for c in signs() {
        for s in [-0.4, -0.1, 0.1, 0.4] {
            let sum: f64 = (0..=30u32).map(|n| phi(c, 2 * n, 1, 1) * f64::powi(s, 2 * n as i32 - 1)).sum();
            let v = -2.0 * c.f() * sum;
            let want = match c {
                Sign::Plus => PI / (PI * s).tan(),
                Sign::Minus => PI / (PI * s).sin(),
            };
            w2 = w2.max((v - want).abs());
        }
    }
    // Σ_{k<=K} H_k^{(p)}(b) x^k vs b Li_p(bx)/(1-x): the truncation bound
    // 2|x|^{K+1}/(1-|x|) sits far below double rounding at K = 200, so the
    // comparison allows the rounding of the partial sum on top of it
    let k_max = 200;
    let mut w6: f64 = 0.0;
    for x in [-0.5, -0.25, 0.25, 0.5] {
        for p in 1..=4u32 {
            for b in signs() {
                let mut sum = 0.0;
                let mut abs = 0.0;
                for k in 1..=k_max {
                    let t = gen_harmonic(HarmonicKind::H, k, p, b).value * f64::powi(x, k as i32);
                    sum += t;
                    abs += t.abs();
                }
                let gf = b.f() * polylog(p, b.f() * x).unwrap().value / (1.0 - x);
                let bound = 2.0 * f64::powi(x.abs(), k_max as i32 + 1) / (1.0 - x.abs())
                    + 8.0 * f64::EPSILON * (abs + gf.abs());
                w6 = w6.max((sum - gf).abs() / bound);
            }
        }
    }
    Line {
        id: 10,
        title: "cot/csc series truncation <= 1e-10 and harmonic generating function within its truncation bound",
        pass: w2 <= 1e-10 && w6 <= 1.0,
        detail: format!("cot/csc max diff {w2:.1e}, generating function worst diff/bound {w6:.2}"),
    }
}

fn main() {
    let (c7, c7_explained) = c7_corollaries();
    let lines = [
        c1_lattice(),
        c2_catalan_log2(),
        c3_euler(),
        c4_inversion_pv(),
        c5_specfun(),
        c6_beta(),
        c7,
        c8_reflection(),
        c9_rational_halfline(),
        c10_cot_and_generating_function(),
    ];
    let mut unexpected = 0;
    for l in &lines {
        println!(
            "criterion {:>2} {}: {} ({})",
            l.id,
            if l.pass { "PASS" } else { "FAIL" },
            l.title,
            l.detail
        );
        let known = l.id == 7 && c7_explained;
        if !l.pass && !known {
            unexpected += 1;
        }
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed}/{} criteria pass", lines.len());
    if !c7_explained {
        println!("criterion 7 disagreements are not fully explained by the documented misprints");
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
