//! Spectrum of quantum multiplication: the characteristic polynomial of the
//! hyperplane-class operator, semisimplicity through the trace form, and the
//! certified location of the eigenvalue of largest modulus.

mod roots;

pub use roots::{
    count_roots, fourth_root_bounds, largest_real_root, newton_polish, newton_refine, root_bound, sturm_chain,
    RootInterval,
};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{format_decimal, frac, parse_rational, rat, to_f64, MultiPoly, Rational, RationalMatrix, UniPoly};
use crate::expected::{CHARPOLY_Q1, T_CG_DECIMAL, Y_MAX_DECIMAL};
use crate::presentation::{cg_relations, cg_vars, diff_tables, GiambelliDictionary, QuantumPresentation};
use crate::report::{Check, VerificationReport};
use crate::schubert::{Label, MultiplicationTable, SchubertElement, DIMENSION};

/// Fano index: c1 = 4 * s1.
pub const FANO_INDEX: u32 = 4;

/// Quantum multiplication by a fixed element at a fixed value of q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationOperator {
    pub multiplier: SchubertElement,
    pub q: Rational,
    /// Column j holds the coordinates of `multiplier * basis_j`.
    pub matrix: RationalMatrix,
}

pub fn multiplication_matrix(table: &MultiplicationTable, x: &SchubertElement, q: &Rational) -> MultiplicationOperator {
    let mut m = RationalMatrix::zeros(15, 15);
    for (j, b) in Label::ALL.iter().enumerate() {
        let col = table.quantum_product(x, &SchubertElement::basis(*b)).specialize(q);
        for (i, v) in col.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    MultiplicationOperator { multiplier: x.clone(), q: q.clone(), matrix: m }
}

/// The hyperplane-class operator.
pub fn sigma1_operator(table: &MultiplicationTable, q: &Rational) -> MultiplicationOperator {
    multiplication_matrix(table, &SchubertElement::basis(Label::S1), q)
}

/// det(tI - M) for the hyperplane-class operator.
pub fn charpoly_at(table: &MultiplicationTable, q: &Rational) -> UniPoly {
    sigma1_operator(table, q).matrix.charpoly().expect("operator is square")
}

/// Multiplication by q^(1/4) on t rescales the t^k coefficient of the
/// characteristic polynomial by q^((15 - k) / 4). Compares `at_q` with
/// `at_one` for a fourth power `q = s^4`, returning the offending powers.
pub fn grading_violations(at_one: &UniPoly, at_q: &UniPoly, s: &Rational) -> Vec<u32> {
    (0..=15u32)
        .filter(|k| {
            let f = pow(s, 15 - k);
            at_q.coeff(*k) != &at_one.coeff(*k) * &f
        })
        .collect()
}

fn pow(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| &acc * r)
}

/// Whether the hyperplane operator at q = 0 has vanishing 15th power.
pub fn sigma1_nilpotent_at_zero(table: &MultiplicationTable) -> bool {
    let m = sigma1_operator(table, &Rational::zero()).matrix;
    let mut p = m.clone();
    for _ in 1..15 {
        p = &p * &m;
    }
    p.is_zero()
}

/// Gram matrix of the trace form `B(x, y) = tr(mult(x * y))` in the
/// Schubert basis at the given q.
pub fn trace_form(table: &MultiplicationTable, q: &Rational) -> RationalMatrix {
    let traces: Vec<Rational> = Label::ALL
        .iter()
        .map(|l| multiplication_matrix(table, &SchubertElement::basis(*l), q).matrix.trace())
        .collect();
    let mut g = RationalMatrix::zeros(15, 15);
    for (i, a) in Label::ALL.iter().enumerate() {
        for (j, b) in Label::ALL.iter().enumerate() {
            let coords = table.product(*a, *b).specialize(q);
            let v = coords.iter().zip(&traces).fold(Rational::zero(), |acc, (c, t)| acc + c * t);
            g.set(i, j, v);
        }
    }
    g
}

/// Result of the trace-form test, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semisimplicity {
    pub q: String,
    pub semisimple: bool,
    pub rank: usize,
    pub gram_determinant: String,
    pub symmetric: bool,
}

/// In characteristic zero a finite-dimensional commutative algebra is
/// semisimple exactly when its trace form is nondegenerate.
pub fn check_semisimple(table: &MultiplicationTable, q: &Rational) -> Semisimplicity {
    let g = trace_form(table, q);
    let det = g.determinant().expect("square");
    Semisimplicity {
        q: q.to_string(),
        semisimple: !det.is_zero(),
        rank: g.rank(),
        gram_determinant: det.to_string(),
        symmetric: g == g.transpose(),
    }
}

/// If `p = t^3 * f(t^4)` with `f(0) != 0` (the shape forced by the grading
/// for a degree-15 polynomial), returns `f`.
pub fn fourth_power_factor(p: &UniPoly) -> Option<UniPoly> {
    // 15 = 4 * 3 + 3
    let shift = 3;
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if e < shift || (e - shift) % FANO_INDEX != 0 {
            return None;
        }
        terms.push(((e - shift) / FANO_INDEX, c.clone()));
    }
    let f = UniPoly::from_terms(terms);
    if f.coeff(0).is_zero() {
        return None;
    }
    Some(f)
}

/// Discriminant of a cubic `a y^3 + b y^2 + c y + d`.
pub fn cubic_discriminant(f: &UniPoly) -> Option<Rational> {
    if f.degree() != Some(3) {
        return None;
    }
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    Some(
        rat(18) * &a * &b * &c * &d - rat(4) * &b * &b * &b * &d + &b * &b * &c * &c
            - rat(4) * &a * &c * &c * &c
            - rat(27) * &a * &a * &d * &d,
    )
}

/// An eigenvalue approximation. `radius` bounds the distance to a true
/// eigenvalue; it is zero for exactly known eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvalue {
    #[serde(serialize_with = "decimal")]
    pub re: f64,
    #[serde(serialize_with = "decimal")]
    pub im: f64,
    #[serde(serialize_with = "scientific")]
    pub radius: f64,
    pub multiplicity: u32,
}

impl Eigenvalue {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

fn decimal<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:.15}"))
}

fn scientific<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{x:.3e}"))
}

/// A certified real number: exact rational bounds and a decimal readout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enclosure {
    pub lo: String,
    pub hi: String,
    pub decimal: String,
    pub radius: String,
}

impl Enclosure {
    fn new(lo: &Rational, hi: &Rational, digits: usize) -> Self {
        let mid = (lo + hi) / rat(2);
        let r = (hi - lo) / rat(2);
        Enclosure {
            lo: lo.to_string(),
            hi: hi.to_string(),
            decimal: format_decimal(&mid, digits),
            radius: format!("{:.3e}", to_f64(&r)),
        }
    }
}

/// The anticanonical spectral radius `T(CG) = 4 * y_max^(1/4)` and whether
/// it strictly exceeds `dim + 1`, both certified from a rational enclosure
/// of `y_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GalkinBound {
    pub t_cg: Enclosure,
    pub bound: u32,
    pub bound_ok: bool,
}

impl GalkinBound {
    pub fn value(&self) -> f64 {
        to_f64(&parse_rational(&self.t_cg.lo).expect("own output")) / 2.0
            + to_f64(&parse_rational(&self.t_cg.hi).expect("own output")) / 2.0
    }
}

/// `T(CG) > dim + 1` holds iff `y_max > ((dim + 1) / 4)^4`, decided exactly
/// on the lower end of the enclosure.
pub fn galkin_bound(y: &RootInterval) -> GalkinBound {
    let bound = DIMENSION + 1;
    let (lo, hi) = fourth_root_bounds(&y.lo, &y.hi);
    let four = rat(FANO_INDEX as i64);
    let threshold = pow(&frac(bound as i64, FANO_INDEX as i64), 4);
    GalkinBound { t_cg: Enclosure::new(&(&lo * &four), &(&hi * &four), 12), bound, bound_ok: y.lo > threshold }
}

/// Everything the conjecture O check establishes, with the evidence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    pub q: String,
    /// det(tI - M); the published p(t) is its negative.
    pub char_poly: String,
    pub char_poly_coefficients: Vec<(u32, String)>,
    /// Monic f with det(tI - M) = t^3 f(t^4).
    pub cubic: Option<String>,
    pub cubic_discriminant: Option<String>,
    pub real_roots_of_cubic: Option<usize>,
    pub y_max: Option<Enclosure>,
    /// Spectral radius of the hyperplane operator.
    pub t: Option<Enclosure>,
    pub galkin: Option<GalkinBound>,
    pub eigenvalues: Vec<Eigenvalue>,
    pub trace_form: Semisimplicity,
    pub max_eigenvalue_real_simple: bool,
    pub modulus_t_set_is_t_times_fourth_roots: bool,
    pub trace_form_nondegenerate: bool,
    pub diagnostics: Vec<String>,
}

impl SpectralReport {
    pub fn all_flags(&self) -> bool {
        self.max_eigenvalue_real_simple && self.modulus_t_set_is_t_times_fourth_roots && self.trace_form_nondegenerate
    }

    /// Moduli of the eigenvalues, with multiplicity, largest first.
    pub fn moduli(&self) -> Vec<f64> {
        let mut m: Vec<f64> = self
            .eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.modulus(), e.multiplicity as usize))
            .collect();
        m.sort_by(|a, b| b.total_cmp(a));
        m
    }

    pub fn y_max_interval(&self) -> Option<RootInterval> {
        let y = self.y_max.as_ref()?;
        Some(RootInterval { lo: parse_rational(&y.lo).ok()?, hi: parse_rational(&y.hi).ok()? })
    }
}

/// Complex numbers as pairs, just enough for Horner evaluation.
fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn ceval(p: &UniPoly, z: (f64, f64)) -> (f64, f64) {
    let n = p.degree().unwrap_or(0);
    (0..=n).rev().fold((0.0, 0.0), |acc, k| {
        let m = cmul(acc, z);
        (m.0 + to_f64(&p.coeff(k)), m.1)
    })
}

fn cabs(z: (f64, f64)) -> f64 {
    z.0.hypot(z.1)
}

/// For a squarefree polynomial of degree n, some root lies within
/// `n |h(z)| / |h'(z)|` of any point z. Padded for rounding in the
/// evaluation itself.
fn root_radius(h: &UniPoly, z: (f64, f64)) -> f64 {
    let n = h.degree().unwrap_or(1) as f64;
    let d = cabs(ceval(&h.derivative(), z));
    let scale = h.terms().map(|(_, c)| to_f64(c).abs()).fold(0.0, f64::max) * cabs(z).max(1.0).powi(n as i32);
    n * (cabs(ceval(h, z)) + 64.0 * f64::EPSILON * scale) / d
}

/// Precision of the certified enclosure of y_max, as a power of two.
const Y_BITS: u32 = 120;

/// Runs the conjecture O analysis for the hyperplane operator at q = 1.
pub fn conjecture_o_check(table: &MultiplicationTable) -> SpectralReport {
    conjecture_o_check_at(table, &Rational::one())
}

pub fn conjecture_o_check_at(table: &MultiplicationTable, q: &Rational) -> SpectralReport {
    let p = charpoly_at(table, q);
    let trace = check_semisimple(table, q);
    let mut rep = SpectralReport {
        q: q.to_string(),
        char_poly: p.display_with("t"),
        char_poly_coefficients: p.terms().map(|(e, c)| (e, c.to_string())).collect::<Vec<_>>().into_iter().rev().collect(),
        cubic: None,
        cubic_discriminant: None,
        real_roots_of_cubic: None,
        y_max: None,
        t: None,
        galkin: None,
        eigenvalues: Vec::new(),
        trace_form_nondegenerate: trace.semisimple,
        trace_form: trace,
        max_eigenvalue_real_simple: false,
        modulus_t_set_is_t_times_fourth_roots: false,
        diagnostics: Vec::new(),
    };
    if !rep.trace_form_nondegenerate {
        rep.diagnostics.push(format!("trace form has rank {} < 15", rep.trace_form.rank));
    }

    let Some(f) = fourth_power_factor(&p) else {
        rep.diagnostics.push(format!("{} is not of the form t^3 f(t^4) with f(0) != 0", rep.char_poly));
        return rep;
    };
    rep.cubic = Some(f.display_with("y"));
    let Some(disc) = cubic_discriminant(&f) else {
        rep.diagnostics.push(format!("f = {} is not a cubic", f.display_with("y")));
        return rep;
    };
    rep.cubic_discriminant = Some(disc.to_string());
    if !f.is_squarefree() {
        rep.diagnostics.push("f has a repeated root".into());
        return rep;
    }
    let chain = sturm_chain(&f);
    let b = root_bound(&f);
    let real = count_roots(&chain, &-b.clone(), &b);
    rep.real_roots_of_cubic = Some(real);
    if real != 1 || !disc.is_negative() {
        rep.diagnostics.push(format!("f has {real} real roots; exactly one is needed"));
        return rep;
    }
    let coarse = largest_real_root(&f, &frac(1, 1 << 20)).expect("one real root");
    let y = newton_refine(&f, &coarse, 8, Y_BITS);
    if y.lo <= Rational::zero() {
        rep.diagnostics.push("the real root of f is not positive".into());
        return rep;
    }
    rep.y_max = Some(Enclosure::new(&y.lo, &y.hi, 14));

    // The other two roots are conjugate with product f(0)-determined:
    // |z|^2 = -f(0) / y_max for monic f. Dominance |z| < y_max is then
    // y_max^3 > -f(0), checked at the lower end.
    let c0 = -f.coeff(0) / f.leading_coeff();
    let dominant = pow(&y.lo, 3) > c0;
    if !dominant {
        rep.diagnostics.push("the real root does not dominate the complex pair".into());
    }

    let (t_lo, t_hi) = fourth_root_bounds(&y.lo, &y.hi);
    rep.t = Some(Enclosure::new(&t_lo, &t_hi, 14));
    rep.galkin = Some(galkin_bound(&y));

    // Eigenvalues: 0 three times, then the fourth roots of the three roots
    // of f. Those of y_max are certified by the rational enclosure; those of
    // the complex pair by the root-distance bound on h(t) = f(t^4).
    let t_mid = to_f64(&((&t_lo + &t_hi) / rat(2)));
    let t_rad = to_f64(&((&t_hi - &t_lo) / rat(2)));
    rep.eigenvalues.push(Eigenvalue { re: 0.0, im: 0.0, radius: 0.0, multiplicity: 3 });
    for (re, im) in [(t_mid, 0.0), (0.0, t_mid), (-t_mid, 0.0), (0.0, -t_mid)] {
        rep.eigenvalues.push(Eigenvalue { re, im, radius: t_rad, multiplicity: 1 });
    }
    let ym = to_f64(&y.midpoint());
    let s = to_f64(&-f.coeff(2)) - ym; // sum of the pair
    let prod = to_f64(&c0) / ym;
    let (zr, zi) = (s / 2.0, (prod - s * s / 4.0).max(0.0).sqrt());
    let h = f.compose_power(FANO_INDEX);
    for z in [(zr, zi), (zr, -zi)] {
        let (r, arg) = (cabs(z).powf(0.25), z.1.atan2(z.0) / 4.0);
        for k in 0..4 {
            let a = arg + k as f64 * std::f64::consts::FRAC_PI_2;
            let w = (r * a.cos(), r * a.sin());
            rep.eigenvalues.push(Eigenvalue { re: w.0, im: w.1, radius: root_radius(&h, w), multiplicity: 1 });
        }
    }

    let moduli = rep.moduli();
    let gap = rep
        .eigenvalues
        .iter()
        .skip(5)
        .all(|e| e.modulus() + e.radius < t_mid - t_rad);
    if moduli.len() != 15 {
        rep.diagnostics.push(format!("{} eigenvalues counted, expected 15", moduli.len()));
    }
    if !gap {
        rep.diagnostics.push("no strict modulus gap after the first four eigenvalues".into());
    }

    // T is a simple root of h: h'(T) = 4 T^3 f'(y_max) with f squarefree,
    // T > 0, and every other eigenvalue has modulus y^(1/4) < T or is 0.
    rep.max_eigenvalue_real_simple = dominant && moduli.len() == 15;
    rep.modulus_t_set_is_t_times_fourth_roots = dominant && gap && moduli.len() == 15;
    rep
}

/// Relations and Giambelli polynomials with q set to zero.
pub fn classical_presentation(relations: &[MultiPoly], dictionary: &GiambelliDictionary) -> (Vec<MultiPoly>, GiambelliDictionary) {
    let vars = cg_vars();
    let images = [MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1), MultiPoly::zero(&vars)];
    let rels = relations.iter().map(|r| r.substitute(&images)).collect();
    let mut dict = dictionary.clone();
    for (l, p) in dictionary.iter() {
        dict.set(l, p.substitute(&images));
    }
    (rels, dict)
}

fn check_classical_limit(table: &MultiplicationTable, dictionary: &GiambelliDictionary) -> Check {
    let (rels, dict) = classical_presentation(&cg_relations(), dictionary);
    let derived = match QuantumPresentation::new(rels, dict).and_then(|p| p.derived_table()) {
        Ok(t) => t,
        Err(e) => return Check::fail("classical-limit", e.to_string()),
    };
    let diff = diff_tables(&derived, &table.classical_slice());
    let shown: Vec<String> = diff.iter().take(3).map(|(a, b, x, y)| format!("{a}*{b}: {x} vs {y}")).collect();
    Check::new(
        "classical-limit",
        diff.is_empty(),
        if diff.is_empty() {
            "presentation at q = 0 reproduces the classical slice".to_string()
        } else {
            format!("{} classical products differ: {}", diff.len(), shown.join("; "))
        },
    )
}

fn within_relative(x: &Rational, reference: &Rational, tol: &Rational) -> bool {
    (x - reference).abs() <= reference.abs() * tol
}

/// Spectral verification suite.
pub fn verify_spectral(table: &MultiplicationTable, dictionary: &GiambelliDictionary) -> VerificationReport {
    let mut checks = Vec::new();
    let p1 = charpoly_at(table, &Rational::one());
    let want = UniPoly::from_terms(CHARPOLY_Q1.iter().map(|(e, c)| (*e, rat(*c))));
    checks.push(Check::new("charpoly-q1", p1 == want, format!("det(tI - M) = {}", p1.display_with("t"))));

    let p16 = charpoly_at(table, &rat(16));
    let bad = grading_violations(&p1, &p16, &rat(2));
    checks.push(Check::new(
        "grading-covariance",
        bad.is_empty(),
        if bad.is_empty() { "q = 16 rescales t^k by 2^(15-k)".to_string() } else { format!("powers {bad:?} do not rescale") },
    ));

    let nil = sigma1_nilpotent_at_zero(table);
    checks.push(Check::new("nilpotent-q0", nil, if nil { "M^15 = 0 at q = 0" } else { "M^15 != 0 at q = 0" }));
    checks.push(check_classical_limit(table, dictionary));

    let s0 = check_semisimple(table, &Rational::zero());
    checks.push(Check::new("classical-not-semisimple", !s0.semisimple, format!("trace form at q = 0 has rank {}", s0.rank)));

    let rep = conjecture_o_check(table);
    let tf = &rep.trace_form;
    checks.push(Check::new(
        "semisimple-q1",
        tf.semisimple && tf.rank == 15 && tf.symmetric,
        format!("rank {}, Gram determinant {}", tf.rank, tf.gram_determinant),
    ));

    let y_ref = parse_rational(Y_MAX_DECIMAL).expect("literal");
    match rep.y_max_interval() {
        Some(y) => {
            let tol = frac(1, 1_000_000_000);
            let ok = within_relative(&y.lo, &y_ref, &tol) && within_relative(&y.hi, &y_ref, &tol);
            checks.push(Check::new("y-max", ok, format!("y_max in [{}, {}]", format_decimal(&y.lo, 16), format_decimal(&y.hi, 16))));
            let digits = frac(1, 100_000_000_000);
            let ok = (&y.lo - &y_ref).abs() < digits && (&y.hi - &y_ref).abs() < digits;
            checks.push(Check::new("y-max-digits", ok, "13 significant digits agree with the published decimal"));
        }
        None => {
            checks.push(Check::fail("y-max", rep.diagnostics.join("; ")));
        }
    }
    if let Some(f) = rep.cubic.as_ref().and(fourth_power_factor(&p1)) {
        let r = f.eval(&y_ref);
        let scale = (f.derivative().eval(&y_ref) * &y_ref).abs() * frac(1, 1_000_000);
        checks.push(Check::new("y-max-residual", r.abs() < scale, format!("f(published y_max) = {:.3e}", to_f64(&r))));
    }

    match &rep.galkin {
        Some(g) => {
            let t_ref = parse_rational(T_CG_DECIMAL).expect("literal");
            let tol = frac(1, 100_000_000);
            let lo = parse_rational(&g.t_cg.lo).expect("own output");
            let hi = parse_rational(&g.t_cg.hi).expect("own output");
            let ok = (&lo - &t_ref).abs() <= tol && (&hi - &t_ref).abs() <= tol;
            checks.push(Check::new("t-cg", ok, format!("T(CG) = {} +- {}", g.t_cg.decimal, g.t_cg.radius)));
            checks.push(Check::new("galkin-bound", g.bound_ok, format!("T(CG) > {} certified: {}", g.bound, g.bound_ok)));
        }
        None => checks.push(Check::fail("t-cg", rep.diagnostics.join("; "))),
    }
    checks.push(Check::new(
        "modulus-t-set",
        rep.modulus_t_set_is_t_times_fourth_roots,
        "eigenvalues of modulus T are T times the fourth roots of unity",
    ));
    checks.push(Check::new("max-eigenvalue-simple", rep.max_eigenvalue_real_simple, "T is a simple real eigenvalue"));
    VerificationReport::new("spectral", checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::MultiplicationTable;

    fn table() -> MultiplicationTable {
        MultiplicationTable::shipped()
    }

    #[test]
    fn identity_operator() {
        let t = table();
        let m = multiplication_matrix(&t, &SchubertElement::unit(), &rat(5));
        assert_eq!(m.matrix, RationalMatrix::identity(15));
    }

    #[test]
    fn sigma1_at_zero_raises_degree() {
        let m = sigma1_operator(&table(), &Rational::zero()).matrix;
        for (j, b) in Label::ALL.iter().enumerate() {
            for (i, a) in Label::ALL.iter().enumerate() {
                if !m.get(i, j).is_zero() {
                    assert_eq!(a.degree(), b.degree() + 1);
                }
            }
        }
        assert!(sigma1_nilpotent_at_zero(&table()));
    }

    #[test]
    fn shape_factor() {
        let p = UniPoly::from_terms(CHARPOLY_Q1.iter().map(|(e, c)| (*e, rat(*c))));
        let f = fourth_power_factor(&p).unwrap();
        assert_eq!(f.display_with("y"), "y^3 - 102 y^2 + 317 y - 2048");
        let bad = UniPoly::from_terms([(15, rat(1)), (10, rat(1))]);
        assert!(fourth_power_factor(&bad).is_none());
        let no_constant = UniPoly::from_terms([(15, rat(1)), (7, rat(1))]);
        assert!(fourth_power_factor(&no_constant).is_none());
    }

    #[test]
    fn discriminant_certifies_a_complex_pair() {
        let f = UniPoly::from_terms([(3, rat(1)), (2, rat(-102)), (1, rat(317)), (0, rat(-2048))]);
        // -2^4 * 29^3 * 131^2
        assert_eq!(cubic_discriminant(&f).unwrap(), rat(-16 * 24389 * 17161));
    }

    #[test]
    fn galkin_boundary_is_strict() {
        let y = RootInterval { lo: frac(6561, 256), hi: frac(6561, 256) };
        let g = galkin_bound(&y);
        assert!(!g.bound_ok);
        assert!((g.value() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn grading_scaling_detects_a_wrong_coefficient() {
        let p = UniPoly::from_terms(CHARPOLY_Q1.iter().map(|(e, c)| (*e, rat(*c))));
        let mut scaled = UniPoly::from_terms(p.terms().map(|(e, c)| (e, c * pow(&rat(2), 15 - e))));
        assert!(grading_violations(&p, &scaled, &rat(2)).is_empty());
        scaled = &scaled + &UniPoly::monomial(rat(1), 7);
        assert_eq!(grading_violations(&p, &scaled, &rat(2)), vec![7]);
    }
}
