//! Exact curve oracle: builds the rational parametrization attached to a
//! Cayley structure and certifies image degree, cusps, and nodes by
//! binary-form gcd and resultant elimination over the rationals.
//!
//! Nothing here extracts numerical roots. Node existence over the
//! algebraic closure is decided from gcd degrees in quotient rings
//! `Q[s]/(q)` with square-free `q`, splitting the modulus whenever a
//! leading coefficient fails to be invertible.

use crate::cayley::CayleyStructure;
use crate::matrix::{Int, Rat};
use crate::{Error, Result};
use num::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// univariate polynomials over Q (dense, index = power)
// ---------------------------------------------------------------------------

pub(crate) type Poly = Vec<Rat>;

pub(crate) fn poly_trim(p: &mut Poly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn poly_is_zero(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub(crate) fn poly_deg(p: &Poly) -> usize {
    let mut d = p.len();
    while d > 1 && p[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

pub(crate) fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

pub(crate) fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(&mut out);
    out
}

pub(crate) fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![Rat::zero()];
    }
    let mut out = vec![Rat::zero(); poly_deg(a) + poly_deg(b) + 1];
    for i in 0..=poly_deg(a) {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=poly_deg(b) {
            let t = &a[i] * &b[j];
            out[i + j] += t;
        }
    }
    poly_trim(&mut out);
    out
}

pub(crate) fn poly_scale(c: &Rat, a: &Poly) -> Poly {
    let mut out: Poly = a.iter().map(|x| c * x).collect();
    poly_trim(&mut out);
    out
}

/// Quotient and remainder; the divisor must be nonzero.
pub(crate) fn poly_div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!poly_is_zero(b), "division by the zero polynomial");
    let db = poly_deg(b);
    let lead = b[db].clone();
    let mut rem = a.clone();
    poly_trim(&mut rem);
    if poly_is_zero(&rem) || poly_deg(&rem) < db {
        return (vec![Rat::zero()], rem);
    }
    let mut quo = vec![Rat::zero(); poly_deg(&rem) - db + 1];
    while !poly_is_zero(&rem) && poly_deg(&rem) >= db {
        let dr = poly_deg(&rem);
        let c = &rem[dr] / &lead;
        quo[dr - db] = c.clone();
        for j in 0..=db {
            let t = &c * &b[j];
            rem[dr - db + j] -= t;
        }
        poly_trim(&mut rem);
        if dr == db && poly_deg(&rem) == dr && !rem[dr].is_zero() {
            unreachable!("leading term not cancelled");
        }
        if dr == 0 {
            break;
        }
    }
    poly_trim(&mut quo);
    (quo, rem)
}

/// Monic gcd via the primitive pseudo-remainder sequence over the
/// integers, which keeps intermediate coefficients small.
pub(crate) fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if poly_is_zero(a) {
        return make_monic(b);
    }
    if poly_is_zero(b) {
        return make_monic(a);
    }
    let mut x = crate::matrix::clear_denominators(a);
    let mut y = crate::matrix::clear_denominators(b);
    int_trim(&mut x);
    int_trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !(y.len() == 1 && y[0].is_zero()) {
        let r = int_prem(&x, &y);
        x = y;
        y = crate::matrix::primitive(&r);
        int_trim(&mut y);
    }
    make_monic(&x.into_iter().map(Rat::from_integer).collect())
}

fn make_monic(p: &Poly) -> Poly {
    let mut p = p.clone();
    poly_trim(&mut p);
    if poly_is_zero(&p) {
        return p;
    }
    let lead = p[poly_deg(&p)].clone();
    poly_scale(&(Rat::one() / lead), &p)
}

fn int_trim(p: &mut Vec<Int>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo-remainder of integer polynomials: a power of `lc(b)` times `a`,
/// reduced modulo `b`, all over the integers.
fn int_prem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    debug_assert!(!b[db].is_zero());
    let lead = b[db].clone();
    let mut rem: Vec<Int> = a.to_vec();
    int_trim(&mut rem);
    while rem.len() - 1 >= db && !(rem.len() == 1 && rem[0].is_zero()) {
        let dr = rem.len() - 1;
        let c = rem[dr].clone();
        for x in rem.iter_mut() {
            *x *= &lead;
        }
        for j in 0..=db {
            let t = &c * &b[j];
            rem[dr - db + j] -= t;
        }
        int_trim(&mut rem);
        if dr == 0 {
            break;
        }
    }
    rem
}

pub(crate) fn poly_derivative(p: &Poly) -> Poly {
    if poly_deg(p) == 0 {
        return vec![Rat::zero()];
    }
    let mut out: Poly =
        (1..=poly_deg(p)).map(|i| &p[i] * Rat::from_integer(Int::from(i as i64))).collect();
    poly_trim(&mut out);
    out
}

pub(crate) fn poly_squarefree(p: &Poly) -> Poly {
    if poly_is_zero(p) || poly_deg(p) == 0 {
        return p.clone();
    }
    let g = poly_gcd(p, &poly_derivative(p));
    if poly_deg(&g) == 0 {
        return p.clone();
    }
    let (q, r) = poly_div_rem(p, &g);
    debug_assert!(poly_is_zero(&r));
    q
}

/// Rescale to primitive integer coefficients; the zero set is unchanged.
pub(crate) fn poly_primitive(p: &Poly) -> Poly {
    if poly_is_zero(p) {
        return vec![Rat::zero()];
    }
    crate::matrix::clear_denominators(p).into_iter().map(Rat::from_integer).collect()
}

/// Extended gcd step: either an inverse of `a` modulo `q`, or a proper
/// monic factor of `q` exposed by the attempt.
enum ModInverse {
    Inverse(Poly),
    Factor(Poly),
    Zero,
}

fn poly_mod(a: &Poly, q: &Poly) -> Poly {
    poly_div_rem(a, q).1
}

fn mod_inverse(a: &Poly, q: &Poly) -> ModInverse {
    let a = poly_mod(a, q);
    if poly_is_zero(&a) {
        return ModInverse::Zero;
    }
    let (mut r0, mut r1) = (q.clone(), a.clone());
    let (mut s0, mut s1) = (vec![Rat::zero()], vec![Rat::one()]);
    while !poly_is_zero(&r1) {
        let (quo, rem) = poly_div_rem(&r0, &r1);
        let snew = poly_sub(&s0, &poly_mul(&quo, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = snew;
    }
    if poly_deg(&r0) == 0 {
        let lead = r0[0].clone();
        ModInverse::Inverse(poly_mod(&poly_scale(&(Rat::one() / lead), &s0), q))
    } else if poly_deg(&r0) == poly_deg(q) {
        // a is a multiple of q modulo scaling; cannot happen after poly_mod
        ModInverse::Zero
    } else {
        let lead = r0[poly_deg(&r0)].clone();
        ModInverse::Factor(poly_scale(&(Rat::one() / lead), &r0))
    }
}

// ---------------------------------------------------------------------------
// binary forms
// ---------------------------------------------------------------------------

/// A homogeneous form in `y0, y1` with rational coefficients;
/// `coeffs[i]` multiplies `y0^(deg-i) y1^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    /// The linear form `a*y0 + b*y1`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn one() -> Self {
        BinaryForm { coeffs: vec![Rat::one()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_linear(&self) -> bool {
        self.degree() == 1 && !self.is_zero()
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let d = self.degree() + other.degree();
        let mut out = vec![Rat::zero(); d + 1];
        for i in 0..self.coeffs.len() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..other.coeffs.len() {
                let t = &self.coeffs[i] * &other.coeffs[j];
                out[i + j] += t;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        let mut acc = BinaryForm::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, y0: &Rat, y1: &Rat) -> Rat {
        let d = self.degree();
        let mut pow0 = vec![Rat::one()];
        for _ in 0..d {
            let next = pow0.last().unwrap() * y0;
            pow0.push(next);
        }
        let mut acc = Rat::zero();
        let mut pow1 = Rat::one();
        for i in 0..=d {
            acc += &self.coeffs[i] * &pow0[d - i] * &pow1;
            pow1 *= y1;
        }
        acc
    }

    /// Partial derivative with respect to `y0`.
    pub fn d0(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm { coeffs: vec![Rat::zero()] };
        }
        let coeffs = (0..d)
            .map(|i| &self.coeffs[i] * Rat::from_integer(Int::from((d - i) as i64)))
            .collect();
        BinaryForm { coeffs }
    }

    /// Partial derivative with respect to `y1`.
    pub fn d1(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm { coeffs: vec![Rat::zero()] };
        }
        let coeffs = (1..=d)
            .map(|i| &self.coeffs[i] * Rat::from_integer(Int::from(i as i64)))
            .collect();
        BinaryForm { coeffs }
    }

    /// Split off the `y0` and `y1` multiplicities, leaving a univariate
    /// core in `t = y1/y0` with nonzero constant and leading terms.
    fn split(&self) -> (usize, usize, Poly) {
        assert!(!self.is_zero(), "split of the zero form");
        let y1_mult = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let y0_mult = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let core: Poly = self.coeffs[y1_mult..self.coeffs.len() - y0_mult].to_vec();
        (y0_mult, y1_mult, core)
    }

    /// Dehomogenization `F(1, t)` as a dense univariate polynomial in `t`.
    pub(crate) fn affine(&self) -> Poly {
        let mut p = self.coeffs.clone();
        poly_trim(&mut p);
        p
    }

    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a0, b0, p) = self.split();
        let (a1, b1, q) = other.split();
        let g = poly_gcd(&p, &q);
        let mut form = BinaryForm { coeffs: g };
        for _ in 0..a0.min(a1) {
            form = form.mul(&BinaryForm::from_i64(&[1, 0]));
        }
        for _ in 0..b0.min(b1) {
            form = form.mul(&BinaryForm::from_i64(&[0, 1]));
        }
        form
    }
}

/// `f ∧ g = f(1,0) g(0,1) − g(1,0) f(0,1)`; zero iff the linear forms
/// share a root.
pub fn wedge(f: &BinaryForm, g: &BinaryForm) -> Rat {
    assert!(f.is_linear() && g.is_linear());
    &f.coeffs[0] * &g.coeffs[1] - &g.coeffs[0] * &f.coeffs[1]
}

// ---------------------------------------------------------------------------
// parametrized curves
// ---------------------------------------------------------------------------

const ORACLE_MAX_DEGREE: usize = 4;
const ORACLE_MAX_POINTS: usize = 8;
const RETRIES: usize = 12;

/// Projective point on the parameter line, normalized to `(1, t)` or `(0, 1)`.
pub type ProjPoint = (Rat, Rat);

fn root_of_linear(f: &BinaryForm) -> ProjPoint {
    // a y0 + b y1 vanishes at (b : -a)
    let a = &f.coeffs()[0];
    let b = &f.coeffs()[1];
    if b.is_zero() {
        (Rat::zero(), Rat::one())
    } else {
        (Rat::one(), -(a / b))
    }
}

/// The explicit rational parametrization attached to a Cayley structure:
/// one degree-`d` form per image point, the product of the chosen linear
/// forms with the image exponents.
#[derive(Clone, Debug)]
pub struct CurveParametrization {
    image: Vec<Vec<Int>>,
    forms: Vec<BinaryForm>,
    big: Vec<BinaryForm>,
    marked: Vec<ProjPoint>,
    degree: usize,
}

impl CurveParametrization {
    pub fn image(&self) -> &[Vec<Int>] {
        &self.image
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    pub fn coordinate_forms(&self) -> &[BinaryForm] {
        &self.big
    }

    pub fn marked_points(&self) -> &[ProjPoint] {
        &self.marked
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Build the parametrization `y -> (f^{pi(u)})_u` from explicit linear
/// forms with pairwise distinct roots.
pub fn build_parametrization(
    pi: &CayleyStructure,
    forms: &[BinaryForm],
) -> Result<CurveParametrization> {
    build_from_image(&pi.image(), forms)
}

/// Same construction from a bare image set; the oracle only ever sees the
/// image.
pub fn build_from_image(image: &[Vec<Int>], forms: &[BinaryForm]) -> Result<CurveParametrization> {
    if image.is_empty() {
        return Err(Error::EmptyInput("image set"));
    }
    let ell1 = image[0].len();
    if forms.len() != ell1 {
        return Err(Error::DimensionMismatch { expected: ell1, got: forms.len() });
    }
    for f in forms {
        if !f.is_linear() {
            return Err(Error::DegenerateForms);
        }
    }
    for i in 0..forms.len() {
        for j in 0..i {
            if wedge(&forms[i], &forms[j]).is_zero() {
                return Err(Error::DegenerateForms);
            }
        }
    }
    let degree_int: Int = image[0].iter().sum();
    let degree = usize::try_from(
        i64::try_from(&degree_int).map_err(|_| Error::OracleLimit("degree too large".into()))?,
    )
    .map_err(|_| Error::OracleLimit("degree too large".into()))?;
    if degree > ORACLE_MAX_DEGREE {
        return Err(Error::OracleLimit(format!(
            "degree {degree} exceeds the oracle bound {ORACLE_MAX_DEGREE}"
        )));
    }
    if image.len() > ORACLE_MAX_POINTS {
        return Err(Error::OracleLimit(format!(
            "{} image points exceed the oracle bound {ORACLE_MAX_POINTS}",
            image.len()
        )));
    }
    let mut image: Vec<Vec<Int>> = image.to_vec();
    image.sort();
    image.dedup();
    // every verdict is invariant under rescaling the forms, so work with
    // primitive integer coefficients
    let forms: Vec<BinaryForm> = forms
        .iter()
        .map(|f| {
            let ints = crate::matrix::clear_denominators(f.coeffs());
            BinaryForm::new(ints.into_iter().map(Rat::from_integer).collect())
        })
        .collect();
    let big: Vec<BinaryForm> = image
        .iter()
        .map(|v| {
            let mut acc = BinaryForm::one();
            for (i, e) in v.iter().enumerate() {
                let e = usize::try_from(i64::try_from(e).unwrap()).unwrap();
                acc = acc.mul(&forms[i].pow(e));
            }
            acc
        })
        .collect();
    let marked: Vec<ProjPoint> = forms.iter().map(root_of_linear).collect();
    for p in &marked {
        if big.iter().all(|f| f.eval(&p.0, &p.1).is_zero()) {
            return Err(Error::InvalidStructure("parametrization has a basepoint".into()));
        }
    }
    Ok(CurveParametrization { image, forms: forms.to_vec(), big, marked, degree })
}

fn is_marked_root(c: &CurveParametrization, t: &Rat) -> bool {
    c.forms.iter().any(|f| f.eval(&Rat::one(), t).is_zero())
}

/// Fiber cardinality (with multiplicity) through the parameter `t0`: the
/// degree of the gcd of the two-by-two minors pinned at `t0`.
fn fiber_degree_at(c: &CurveParametrization, t0: &Rat) -> usize {
    let vals: Vec<Rat> = c.big.iter().map(|f| f.eval(&Rat::one(), t0)).collect();
    let mut g: Option<BinaryForm> = None;
    for u in 0..c.big.len() {
        for v in 0..u {
            let mut coeffs = vec![Rat::zero(); c.degree + 1];
            for (k, cf) in c.big[u].coeffs().iter().enumerate() {
                coeffs[k] += cf * &vals[v];
            }
            for (k, cf) in c.big[v].coeffs().iter().enumerate() {
                coeffs[k] -= cf * &vals[u];
            }
            let minor = BinaryForm::new(coeffs);
            if minor.is_zero() {
                continue;
            }
            g = Some(match g {
                None => minor,
                Some(prev) => prev.gcd(&minor),
            });
            if g.as_ref().map_or(false, |g| g.degree() == 1) {
                return 1;
            }
        }
    }
    g.map_or(c.degree, |g| g.degree())
}

/// Generic fiber cardinality of the parametrizing map; the image degree is
/// `d / k`. Degenerate sample parameters only inflate the fiber, so the
/// minimum over three clean samples starting at `t0` is returned (a sample
/// of one settles it immediately).
pub fn map_degree(c: &CurveParametrization, t0: &Rat) -> Result<usize> {
    if c.degree == 0 {
        return Err(Error::OracleLimit("constant parametrization".into()));
    }
    let mut samples = Vec::new();
    let mut t = t0.clone();
    let mut tries = 0;
    while samples.len() < 3 {
        if tries > RETRIES {
            return Err(Error::DegenerateParameter(RETRIES));
        }
        tries += 1;
        if !is_marked_root(c, &t) {
            let k = fiber_degree_at(c, &t);
            if k == 1 {
                return Ok(1);
            }
            samples.push(k);
        }
        t += Rat::one();
    }
    Ok(samples.into_iter().min().unwrap())
}

/// Combined verdicts at one parametrization: the fiber cardinality, and
/// (for birational maps) the cusp and node answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdicts {
    pub fiber_degree: usize,
    pub cusp: Option<bool>,
    pub node: Option<bool>,
}

pub fn oracle_verdicts(c: &CurveParametrization, t0: &Rat) -> Result<OracleVerdicts> {
    let k = map_degree(c, t0)?;
    if k != 1 {
        return Ok(OracleVerdicts { fiber_degree: k, cusp: None, node: None });
    }
    Ok(OracleVerdicts {
        fiber_degree: 1,
        cusp: Some(cusp_inner(c)),
        node: Some(node_inner(c)?),
    })
}

fn require_birational(c: &CurveParametrization) -> Result<()> {
    let k = map_degree(c, &Rat::new(Int::from(2), Int::from(3)))?;
    if k == 1 {
        Ok(())
    } else {
        Err(Error::NotBirational(k))
    }
}

/// Ramification test for a birational basepoint-free parametrization: the
/// Wronskian covariants of all coordinate pairs share a root iff the image
/// has a cuspidal point.
pub fn has_cusp(c: &CurveParametrization) -> Result<bool> {
    require_birational(c)?;
    Ok(cusp_inner(c))
}

fn cusp_inner(c: &CurveParametrization) -> bool {
    let mut g: Option<BinaryForm> = None;
    for u in 0..c.big.len() {
        for v in 0..u {
            let juv = c.big[u].d0().mul(&c.big[v].d1());
            let jvu = c.big[u].d1().mul(&c.big[v].d0());
            let coeffs: Vec<Rat> =
                juv.coeffs().iter().zip(jvu.coeffs()).map(|(a, b)| a - b).collect();
            let wronskian = BinaryForm::new(coeffs);
            if wronskian.is_zero() {
                continue;
            }
            g = Some(match g {
                None => wronskian,
                Some(prev) => prev.gcd(&wronskian),
            });
            if g.as_ref().map_or(false, |g| g.degree() == 0) {
                return false;
            }
        }
    }
    g.map_or(false, |g| g.degree() > 0)
}

// ---------------------------------------------------------------------------
// node elimination
// ---------------------------------------------------------------------------

/// Bivariate polynomial in `(s, t)`: coefficients in `s` per power of `t`.
#[derive(Clone, Debug)]
struct BiPoly {
    cols: Vec<Poly>,
}

impl BiPoly {
    fn trim(&mut self) {
        while self.cols.len() > 1 && poly_is_zero(self.cols.last().unwrap()) {
            self.cols.pop();
        }
    }

    fn deg_t(&self) -> usize {
        self.cols.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.cols.iter().all(poly_is_zero)
    }

    fn is_constant(&self) -> bool {
        self.deg_t() == 0 && poly_deg(&self.cols[0]) == 0
    }
}

fn coeff_at(p: &Poly, i: usize) -> Rat {
    if i < p.len() {
        p[i].clone()
    } else {
        Rat::zero()
    }
}

/// `(F_v(s) F_u(t) - F_v(t) F_u(s)) / (s - t)`, assembled from
/// `(s^a t^b - s^b t^a)/(s-t) = s^b t^b (s^{a-b-1} + ... + t^{a-b-1})`.
fn divided_minor(fv: &Poly, fu: &Poly) -> BiPoly {
    let n = fv.len().max(fu.len());
    let size = n.max(1);
    let mut cols = vec![vec![Rat::zero(); size]; size];
    for a in 0..n {
        for b in 0..a {
            let coef = coeff_at(fv, a) * coeff_at(fu, b) - coeff_at(fv, b) * coeff_at(fu, a);
            if coef.is_zero() {
                continue;
            }
            for k in 0..(a - b) {
                // term s^{b+k} t^{a-1-k}
                cols[a - 1 - k][b + k] += &coef;
            }
        }
    }
    let mut out = BiPoly {
        cols: cols
            .into_iter()
            .map(|mut c| {
                poly_trim(&mut c);
                c
            })
            .collect(),
    };
    out.trim();
    out
}

type IPoly = Vec<Int>;

fn ipoly_is_zero(p: &IPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn ipoly_mul(a: &IPoly, b: &IPoly) -> IPoly {
    if ipoly_is_zero(a) || ipoly_is_zero(b) {
        return vec![Int::from(0)];
    }
    let mut out = vec![Int::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += t;
        }
    }
    int_trim(&mut out);
    out
}

fn ipoly_sub(a: &IPoly, b: &IPoly) -> IPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Int::from(0); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    int_trim(&mut out);
    out
}

/// Exact division of integer polynomials (the divisor divides).
fn ipoly_div_exact(a: &IPoly, b: &IPoly) -> IPoly {
    if ipoly_is_zero(a) {
        return vec![Int::from(0)];
    }
    let db = b.len() - 1;
    let mut rem = a.clone();
    int_trim(&mut rem);
    let mut quo = vec![Int::from(0); rem.len().saturating_sub(db)];
    while !(rem.len() == 1 && rem[0].is_zero()) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &b[db];
        for j in 0..=db {
            let t = &c * &b[j];
            rem[dr - db + j] -= t;
        }
        quo[dr - db] = c;
        int_trim(&mut rem);
        if dr == db {
            break;
        }
    }
    debug_assert!(ipoly_is_zero(&rem), "exact division");
    int_trim(&mut quo);
    quo
}

/// Determinant of a square matrix of integer polynomials (Bareiss).
fn poly_matrix_det(mut m: Vec<Vec<IPoly>>) -> IPoly {
    let n = m.len();
    if n == 0 {
        return vec![Int::from(1)];
    }
    let mut sign = false;
    let mut prev: IPoly = vec![Int::from(1)];
    for k in 0..n.saturating_sub(1) {
        if ipoly_is_zero(&m[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !ipoly_is_zero(&m[i][k])) else {
                return vec![Int::from(0)];
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ipoly_sub(&ipoly_mul(&m[k][k], &m[i][j]), &ipoly_mul(&m[i][k], &m[k][j]));
                m[i][j] = ipoly_div_exact(&t, &prev);
            }
            m[i][k] = vec![Int::from(0)];
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign {
        for c in det.iter_mut() {
            let v = -std::mem::take(c);
            *c = v;
        }
    }
    det
}

/// Scale a bivariate polynomial to integer columns; the zero set is
/// preserved (one global factor).
fn bipoly_int_cols(p: &BiPoly) -> Vec<IPoly> {
    let mut lcm = Int::from(1);
    for col in &p.cols {
        for c in col {
            lcm = num::Integer::lcm(&lcm, c.denom());
        }
    }
    p.cols
        .iter()
        .map(|col| {
            let mut v: IPoly =
                col.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
            int_trim(&mut v);
            v
        })
        .collect()
}

/// Sylvester resultant eliminating `t`, with formal `t`-degrees, up to a
/// harmless global scalar.
fn resultant_t(p: &BiPoly, q: &BiPoly) -> Poly {
    let pi = bipoly_int_cols(p);
    let qi = bipoly_int_cols(q);
    let dp = pi.len() - 1;
    let dq = qi.len() - 1;
    let det: IPoly = if dp == 0 {
        let mut acc: IPoly = vec![Int::from(1)];
        for _ in 0..dq {
            acc = ipoly_mul(&acc, &pi[0]);
        }
        acc
    } else if dq == 0 {
        let mut acc: IPoly = vec![Int::from(1)];
        for _ in 0..dp {
            acc = ipoly_mul(&acc, &qi[0]);
        }
        acc
    } else {
        let n = dp + dq;
        let zero: IPoly = vec![Int::from(0)];
        let mut m = vec![vec![zero.clone(); n]; n];
        for row in 0..dq {
            for (j, c) in pi.iter().enumerate() {
                m[row][row + dp - j] = c.clone();
            }
        }
        for row in 0..dp {
            for (j, c) in qi.iter().enumerate() {
                m[dq + row][row + dq - j] = c.clone();
            }
        }
        poly_matrix_det(m)
    };
    crate::matrix::primitive(&det).into_iter().map(Rat::from_integer).collect()
}

/// Element of `Q[s]/(q)[t]`, dense in `t`.
type ModPoly = Vec<Poly>;

fn modpoly_trim(p: &mut ModPoly) {
    while p.len() > 1 && poly_is_zero(p.last().unwrap()) {
        p.pop();
    }
}

fn s_poly() -> Poly {
    vec![Rat::zero(), Rat::one()]
}

enum GcdOutcome {
    Done(ModPoly),
    Split(Poly, Poly),
}

/// One gcd step in `K[t]` for `K = Q[s]/(q)`: gcd of `g` and `b`, or a
/// factorization of the modulus discovered along the way. The result of a
/// completed step is monic.
fn mod_gcd(q: &Poly, g: &ModPoly, b: &ModPoly) -> GcdOutcome {
    let mut x = g.clone();
    let mut y = b.clone();
    modpoly_trim(&mut x);
    modpoly_trim(&mut y);
    loop {
        modpoly_trim(&mut y);
        if y.len() == 1 && poly_is_zero(&y[0]) {
            return GcdOutcome::Done(x);
        }
        let lead = y.last().unwrap().clone();
        match mod_inverse(&lead, q) {
            ModInverse::Zero => {
                y.pop();
                if y.is_empty() {
                    y.push(vec![Rat::zero()]);
                }
            }
            ModInverse::Factor(f) => {
                let (quo, _) = poly_div_rem(q, &f);
                return GcdOutcome::Split(f, quo);
            }
            ModInverse::Inverse(inv) => {
                let ymonic: ModPoly = y.iter().map(|c| poly_mod(&poly_mul(c, &inv), q)).collect();
                let mut rem = x.clone();
                modpoly_trim(&mut rem);
                while rem.len() >= ymonic.len() && !(rem.len() == 1 && poly_is_zero(&rem[0])) {
                    let shift = rem.len() - ymonic.len();
                    let c = rem.last().unwrap().clone();
                    if poly_is_zero(&c) {
                        rem.pop();
                        continue;
                    }
                    for j in 0..ymonic.len() {
                        let t = poly_mod(&poly_mul(&c, &ymonic[j]), q);
                        rem[shift + j] = poly_mod(&poly_sub(&rem[shift + j], &t), q);
                    }
                    modpoly_trim(&mut rem);
                }
                x = ymonic;
                y = rem;
            }
        }
    }
}

/// Is there, over some field component of `Q[s]/(q)`, a common root in `t`
/// of all polynomials away from the diagonal `t = s`, with the chart
/// coordinate `chart(s)` nonvanishing? Splits `q` when components behave
/// differently.
fn common_root_off_diagonal(q: &Poly, polys: &[ModPoly], chart: &Poly) -> bool {
    if poly_deg(q) == 0 {
        return false;
    }
    let bad = poly_gcd(q, chart);
    let q: Poly = if poly_deg(&bad) > 0 {
        let (quo, _) = poly_div_rem(q, &bad);
        quo
    } else {
        q.clone()
    };
    if poly_deg(&q) == 0 {
        return false;
    }
    let split_recurse = |q1: &Poly, q2: &Poly| -> bool {
        common_root_off_diagonal(q1, polys, chart) || common_root_off_diagonal(q2, polys, chart)
    };
    let mut g: ModPoly = vec![vec![Rat::zero()]];
    for p in polys {
        let reduced: ModPoly = {
            let mut r: ModPoly = p.iter().map(|c| poly_mod(c, &q)).collect();
            modpoly_trim(&mut r);
            r
        };
        match mod_gcd(&q, &g, &reduced) {
            GcdOutcome::Done(new_g) => g = new_g,
            GcdOutcome::Split(q1, q2) => return split_recurse(&q1, &q2),
        }
        modpoly_trim(&mut g);
        if g.len() == 1 && !poly_is_zero(&g[0]) {
            match mod_inverse(&g[0], &q) {
                ModInverse::Inverse(_) => return false,
                ModInverse::Factor(f) => {
                    let (quo, _) = poly_div_rem(&q, &f);
                    return split_recurse(&f, &quo);
                }
                ModInverse::Zero => unreachable!("nonzero after reduction"),
            }
        }
    }
    // strip diagonal factors (t - s)
    loop {
        modpoly_trim(&mut g);
        if g.len() <= 1 {
            break;
        }
        let mut val = vec![Rat::zero()];
        let mut spow = vec![Rat::one()];
        for c in g.iter() {
            val = poly_add(&val, &poly_mod(&poly_mul(c, &spow), &q));
            spow = poly_mod(&poly_mul(&spow, &s_poly()), &q);
        }
        let val = poly_mod(&val, &q);
        if poly_is_zero(&val) {
            // synthetic division by (t - s)
            let mut quo: ModPoly = vec![vec![Rat::zero()]; g.len() - 1];
            let mut carry: Poly = vec![Rat::zero()];
            for j in (1..g.len()).rev() {
                carry = poly_mod(&poly_add(&g[j], &poly_mul(&carry, &s_poly())), &q);
                quo[j - 1] = carry.clone();
            }
            g = quo;
            continue;
        }
        let shared = poly_gcd(&val, &q);
        if poly_deg(&shared) > 0 && poly_deg(&shared) < poly_deg(&q) {
            let (rest, _) = poly_div_rem(&q, &shared);
            return split_recurse(&shared, &rest);
        }
        break;
    }
    modpoly_trim(&mut g);
    if g.len() > 1 {
        // monic of positive degree on every component of q: a genuine
        // off-diagonal solution exists over the closure
        return true;
    }
    if poly_is_zero(&g[0]) {
        debug_assert!(false, "all minors vanish on a component of a birational system");
        return false;
    }
    match mod_inverse(&g[0], &q) {
        ModInverse::Inverse(_) | ModInverse::Zero => false,
        ModInverse::Factor(f) => {
            let (quo, _) = poly_div_rem(&q, &f);
            split_recurse(&f, &quo)
        }
    }
}

/// Node detection by exact elimination: does some pair of distinct
/// parameters map to the same image point?
///
/// A pair through a marked point forces the partner to be marked too
/// (otherwise every coordinate of the common image would be nonzero while
/// some coordinate vanishes at the marked parameter), so marked pairs are
/// settled by exact projective comparison. A fully unmarked pair has all
/// image coordinates nonzero and is therefore visible in any single
/// affine chart; one elimination plus one check at infinity covers it.
pub fn has_node(c: &CurveParametrization) -> Result<bool> {
    require_birational(c)?;
    node_inner(c)
}

fn node_inner(c: &CurveParametrization) -> Result<bool> {
    if c.degree <= 1 {
        return Ok(false);
    }
    // marked pairs
    let marked_coords: Vec<Vec<Rat>> = c
        .marked
        .iter()
        .map(|p| c.big.iter().map(|f| f.eval(&p.0, &p.1)).collect())
        .collect();
    for i in 0..c.marked.len() {
        for j in 0..i {
            let (a, b) = (&marked_coords[i], &marked_coords[j]);
            let proportional =
                (0..a.len()).all(|u| (0..u).all(|v| &a[u] * &b[v] == &a[v] * &b[u]));
            if proportional {
                return Ok(true);
            }
        }
    }
    let affines: Vec<Poly> = c.big.iter().map(|f| f.affine()).collect();
    let u0 = 0usize;
    // pairs (s, t) = ((0:1), affine), relevant when (0:1) is unmarked
    let top_u0 = c.big[u0].coeffs().last().unwrap().clone();
    if !top_u0.is_zero() {
        let mut g: Option<Poly> = None;
        for v in 0..c.big.len() {
            if v == u0 {
                continue;
            }
            let top_v = c.big[v].coeffs().last().unwrap().clone();
            let p = poly_sub(
                &poly_scale(&top_v, &affines[u0]),
                &poly_scale(&top_u0, &affines[v]),
            );
            g = Some(match g {
                None => p,
                Some(prev) => poly_gcd(&prev, &p),
            });
            if g.as_ref().map_or(false, |g| poly_deg(g) == 0 && !poly_is_zero(g)) {
                break;
            }
        }
        if let Some(g) = g {
            if !poly_is_zero(&g) && poly_deg(&g) > 0 {
                return Ok(true);
            }
        }
    }
    // affine-affine pairs in the chart u0
    let minors: Vec<BiPoly> = (0..c.big.len())
        .filter(|&v| v != u0)
        .map(|v| divided_minor(&affines[v], &affines[u0]))
        .collect();
    if minors.iter().any(|m| m.is_constant() && !m.is_zero()) {
        return Ok(false);
    }
    if minors.len() < 2 {
        return Ok(false);
    }
    let base_idx = (0..minors.len())
        .filter(|&i| !minors[i].is_zero())
        .min_by_key(|&i| minors[i].deg_t())
        .ok_or_else(|| Error::Internal("all minors vanish".into()))?;
    let base = &minors[base_idx];
    // candidate s-values: any nonzero resultant against the base vanishes
    // on the projection of the solution set; a pair of minors may share a
    // curve component, so skip identically-zero resultants
    let mut cand: Option<Poly> = None;
    for (i, m) in minors.iter().enumerate() {
        if i == base_idx {
            continue;
        }
        let r = poly_primitive(&resultant_t(base, m));
        if poly_is_zero(&r) {
            continue;
        }
        cand = Some(match cand {
            None => r,
            Some(prev) => poly_primitive(&poly_gcd(&prev, &r)),
        });
        if cand.as_ref().map_or(false, |g| poly_deg(g) == 0) {
            break;
        }
    }
    if cand.is_none() {
        // every base pair shares a component; a generic combination of the
        // other minors is coprime to the base because the full gcd of a
        // birational system is constant
        for k in 1..=24i64 {
            let mut combo = BiPoly { cols: vec![vec![Rat::zero()]] };
            let mut weight = Rat::one();
            for (i, m) in minors.iter().enumerate() {
                if i == base_idx {
                    continue;
                }
                let mut cols = combo.cols.clone();
                cols.resize(cols.len().max(m.cols.len()), vec![Rat::zero()]);
                for (j, c) in m.cols.iter().enumerate() {
                    cols[j] = poly_add(&cols[j], &poly_scale(&weight, c));
                }
                combo = BiPoly { cols };
                combo.trim();
                weight *= Rat::from_integer(Int::from(k));
            }
            let r = resultant_t(base, &combo);
            if !poly_is_zero(&r) {
                cand = Some(r);
                break;
            }
        }
    }
    let Some(cand) = cand else {
        return Err(Error::Internal(
            "no nonzero eliminant for a birational parametrization".into(),
        ));
    };
    if poly_deg(&cand) == 0 {
        return Ok(false);
    }
    let q = poly_primitive(&poly_squarefree(&cand));
    let polys: Vec<ModPoly> = minors.iter().map(|m| m.cols.clone()).collect();
    Ok(common_root_off_diagonal(&q, &polys, &affines[u0]))
}

/// Parameters where some coordinate form vanishes; always the marked
/// points for a Cayley-structure parametrization.
pub fn boundary_intersection(c: &CurveParametrization) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = Vec::new();
    for (i, f) in c.forms.iter().enumerate() {
        if c.image.iter().any(|v| v[i].is_positive()) {
            pts.push(root_of_linear(f));
        }
    }
    pts.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    pts.dedup();
    pts
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Deterministic "general" forms `(y1, y0, y0 - y1, y0 - c_3 y1, ...)`,
/// free roots drawn from rationals of height at most 10^4, pairwise
/// distinct.
pub fn random_forms(ell: usize, seed: u64) -> Vec<BinaryForm> {
    let mut forms = vec![BinaryForm::from_i64(&[0, 1]), BinaryForm::from_i64(&[1, 0])];
    let mut roots: Vec<Rat> = vec![Rat::zero()];
    if ell >= 2 {
        forms.push(BinaryForm::from_i64(&[1, -1]));
        roots.push(Rat::one());
    }
    let mut state = seed ^ 0xc0ff_ee5e_ed15_dead;
    while forms.len() < ell + 1 {
        let r = splitmix(&mut state);
        let num = (r % 20_001) as i64 - 10_000;
        let den = ((r >> 32) % 10_000) as i64 + 1;
        let c = Rat::new(Int::from(num), Int::from(den));
        if c.is_zero() || roots.contains(&c) {
            continue;
        }
        roots.push(c.clone());
        forms.push(BinaryForm::linear(Rat::one(), -c));
    }
    forms
}
