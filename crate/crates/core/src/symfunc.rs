use crate::error::{Error, Result};
use crate::partition::Partition;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial in two variable alphabets plus a bookkeeping variable `t`.
/// Exponent vectors are stored with trailing zeros trimmed so equal
/// monomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    x: Vec<u16>,
    y: Vec<u16>,
    t: u16,
}

impl Monomial {
    pub fn new(mut x: Vec<u16>, mut y: Vec<u16>, t: u16) -> Self {
        while x.last() == Some(&0) {
            x.pop();
        }
        while y.last() == Some(&0) {
            y.pop();
        }
        Monomial { x, y, t }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x_exponents(&self) -> &[u16] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u16] {
        &self.y
    }

    pub fn t_exponent(&self) -> u16 {
        self.t
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum::<u32>() + self.y.iter().map(|&e| e as u32).sum::<u32>()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            add_exps(&self.x, &other.x),
            add_exps(&self.y, &other.y),
            self.t + other.t,
        )
    }
}

fn add_exps(a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; a.len().max(b.len())];
    for (i, &e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, &e) in b.iter().enumerate() {
        out[i] += e;
    }
    out
}

fn swap_positions(exps: &[u16], i: usize, j: usize) -> Vec<u16> {
    let mut out = exps.to_vec();
    let need = i.max(j) + 1;
    if out.len() < need {
        out.resize(need, 0);
    }
    out.swap(i, j);
    out
}

/// Sparse polynomial with exact integer coefficients over
/// `x_1..x_k, y_1..y_k, t`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    k: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(k: usize) -> Self {
        MultiPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        let mut p = MultiPoly::zero(k);
        p.add_term(Monomial::one(), BigInt::one());
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert!(m.x.len() <= self.k && m.y.len() <= self.k);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.k, other.k, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.k);
        }
        let mut out = MultiPoly::zero(self.k);
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.k, other.k, "variable count mismatch");
        let mut out = MultiPoly::zero(self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar_monomial(&self, m: &Monomial, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn uses_y(&self) -> bool {
        self.terms.keys().any(|m| !m.y.is_empty())
    }

    pub fn uses_t(&self) -> bool {
        self.terms.keys().any(|m| m.t != 0)
    }

    /// Substitute y_i := 0 (keep only y-free terms).
    pub fn specialize_y_zero(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            if m.y.is_empty() {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitute x_i := 0.
    pub fn specialize_x_zero(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            if m.x.is_empty() {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitute y_i := x_i.
    pub fn specialize_y_to_x(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(add_exps(&m.x, &m.y), Vec::new(), m.t), c.clone());
        }
        out
    }

    /// Substitute y_i := -x_i, so a term picks up the sign of its y-degree.
    pub fn specialize_y_to_neg_x(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            let ydeg: u32 = m.y.iter().map(|&e| e as u32).sum();
            let c = if ydeg % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(Monomial::new(add_exps(&m.x, &m.y), Vec::new(), m.t), c);
        }
        out
    }

    /// Substitute y_i := t * x_i, folding the y-degree into the power of t.
    pub fn specialize_y_to_tx(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            let ydeg: u32 = m.y.iter().map(|&e| e as u32).sum();
            out.add_term(
                Monomial::new(add_exps(&m.x, &m.y), Vec::new(), m.t + ydeg as u16),
                c.clone(),
            );
        }
        out
    }

    /// Exchange the two alphabets.
    pub fn swap_xy(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            out.terms
                .insert(Monomial::new(m.y.clone(), m.x.clone(), m.t), c.clone());
        }
        out
    }

    fn swap_vars(&self, block: char, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.k);
        for (m, c) in &self.terms {
            let m2 = if block == 'x' {
                Monomial::new(swap_positions(&m.x, i, j), m.y.clone(), m.t)
            } else {
                Monomial::new(m.x.clone(), swap_positions(&m.y, i, j), m.t)
            };
            out.add_term(m2, c.clone());
        }
        out
    }

    /// First witness that the polynomial fails to be symmetric in one of
    /// its alphabets, as (block, i, j) with variables 1-based.
    pub fn symmetry_failure(&self) -> Option<(char, usize, usize)> {
        for block in ['x', 'y'] {
            for i in 0..self.k.saturating_sub(1) {
                if self.swap_vars(block, i, i + 1) != *self {
                    return Some((block, i + 1, i + 2));
                }
            }
        }
        None
    }

    pub fn check_symmetric(&self) -> Result<()> {
        match self.symmetry_failure() {
            None => Ok(()),
            Some((block, i, j)) => Err(Error::NotSymmetric { block, i, j }),
        }
    }

    /// Group terms by their power of t; each returned polynomial is t-free.
    pub fn split_by_t(&self) -> Vec<(u16, MultiPoly)> {
        let mut map: BTreeMap<u16, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            map.entry(m.t)
                .or_insert_with(|| MultiPoly::zero(self.k))
                .add_term(Monomial::new(m.x.clone(), m.y.clone(), 0), c.clone());
        }
        map.into_iter().collect()
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let c = c.to_i64().ok_or_else(|| {
                Error::Domain("coefficient does not fit in 64 bits for JSON output".into())
            })?;
            terms.push(json!({
                "x": m.x,
                "y": m.y,
                "t": m.t,
                "c": c,
            }));
        }
        Ok(json!({ "k": self.k, "terms": terms }))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut vars = Vec::new();
            for (i, &e) in m.x.iter().enumerate() {
                if e == 1 {
                    vars.push(format!("x{}", i + 1));
                } else if e > 1 {
                    vars.push(format!("x{}^{}", i + 1, e));
                }
            }
            for (i, &e) in m.y.iter().enumerate() {
                if e == 1 {
                    vars.push(format!("y{}", i + 1));
                } else if e > 1 {
                    vars.push(format!("y{}^{}", i + 1, e));
                }
            }
            if m.t == 1 {
                vars.push("t".to_string());
            } else if m.t > 1 {
                vars.push(format!("t^{}", m.t));
            }
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Which alphabet a generating function's weight lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Schur polynomial of a straight shape in `k` variables.
pub fn schur(lambda: &Partition, k: usize) -> MultiPoly {
    schur_skew_axis(lambda, &Partition::empty(), k, Axis::X).expect("straight shape")
}

/// Schur polynomial with weight in the second alphabet.
pub fn schur_y(lambda: &Partition, k: usize) -> MultiPoly {
    schur_skew_axis(lambda, &Partition::empty(), k, Axis::Y).expect("straight shape")
}

/// Skew Schur polynomial, summing over column-strict fillings with
/// entries in `1..=k`.
pub fn schur_skew(outer: &Partition, inner: &Partition, k: usize) -> Result<MultiPoly> {
    schur_skew_axis(outer, inner, k, Axis::X)
}

pub fn schur_skew_axis(
    outer: &Partition,
    inner: &Partition,
    k: usize,
    axis: Axis,
) -> Result<MultiPoly> {
    if !outer.contains(inner) {
        return Err(Error::ShapeMismatch);
    }
    let rows = outer.len();
    let mut poly = MultiPoly::zero(k);
    // cells listed row-major; grid[r][c] holds entries for in-shape cells
    let mut grid: Vec<Vec<u8>> = (0..rows)
        .map(|r| vec![0u8; outer.part(r) as usize])
        .collect();
    fill_ssyt(outer, inner, k, 0, inner.part(0) as usize, &mut grid, &mut |g| {
        let mut counts = vec![0u16; k];
        for (r, row) in g.iter().enumerate() {
            for c in inner.part(r) as usize..outer.part(r) as usize {
                counts[row[c] as usize - 1] += 1;
            }
        }
        let m = match axis {
            Axis::X => Monomial::new(counts, Vec::new(), 0),
            Axis::Y => Monomial::new(Vec::new(), counts, 0),
        };
        poly.add_term(m, BigInt::one());
    });
    Ok(poly)
}

fn fill_ssyt(
    outer: &Partition,
    inner: &Partition,
    k: usize,
    r: usize,
    c: usize,
    grid: &mut Vec<Vec<u8>>,
    emit: &mut impl FnMut(&Vec<Vec<u8>>),
) {
    if r == outer.len() {
        emit(grid);
        return;
    }
    if c == outer.part(r) as usize {
        let nr = r + 1;
        let nc = if nr < outer.len() { inner.part(nr) as usize } else { 0 };
        fill_ssyt(outer, inner, k, nr, nc, grid, emit);
        return;
    }
    let mut lo = 1u8;
    if c > inner.part(r) as usize {
        lo = lo.max(grid[r][c - 1]); // weakly increasing along rows
    }
    if r > 0 && c < outer.part(r - 1) as usize && c >= inner.part(r - 1) as usize {
        lo = lo.max(grid[r - 1][c] + 1); // strictly increasing down columns
    }
    for e in lo..=k as u8 {
        grid[r][c] = e;
        fill_ssyt(outer, inner, k, r, c + 1, grid, emit);
    }
}

pub fn num_ssyt(lambda: &Partition, k: usize) -> BigInt {
    schur(lambda, k).terms().map(|(_, c)| c).sum()
}

/// Schur P-polynomial of a strict partition in `k` variables: the
/// generating function of marked shifted tableaux with no marks on the
/// main diagonal, at most one marked i per row and at most one unmarked
/// i per column.
pub fn schur_p(lambda: &Partition, k: usize) -> Result<MultiPoly> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.to_string()));
    }
    // entries encoded 2i-1 = marked i, 2i = unmarked i
    let rows = lambda.len();
    let mut grid: Vec<Vec<u8>> = (0..rows)
        .map(|r| vec![0u8; lambda.part(r) as usize])
        .collect();
    let mut poly = MultiPoly::zero(k);
    fill_shifted(lambda, k, 0, 0, &mut grid, &mut |g| {
        let mut counts = vec![0u16; k];
        for row in g {
            for &e in row {
                counts[(e as usize + 1) / 2 - 1] += 1;
            }
        }
        poly.add_term(Monomial::new(counts, Vec::new(), 0), BigInt::one());
    });
    Ok(poly)
}

fn fill_shifted(
    lambda: &Partition,
    k: usize,
    r: usize,
    i: usize,
    grid: &mut Vec<Vec<u8>>,
    emit: &mut impl FnMut(&Vec<Vec<u8>>),
) {
    if r == lambda.len() {
        emit(grid);
        return;
    }
    if i == lambda.part(r) as usize {
        fill_shifted(lambda, k, r + 1, 0, grid, emit);
        return;
    }
    // row r occupies shifted columns r..r+lambda_r; index i is the offset
    let col = r + i;
    for e in 1..=2 * k as u8 {
        let marked = e % 2 == 1;
        if marked && i == 0 {
            continue; // the diagonal cell of each row is unmarked
        }
        if i > 0 {
            let left = grid[r][i - 1];
            if left > e || (marked && left == e) {
                continue;
            }
        }
        if r > 0 {
            // cell above sits in row r-1 at offset col - (r-1)
            let off = col - (r - 1);
            if off < lambda.part(r - 1) as usize {
                let above = grid[r - 1][off];
                if above > e || (!marked && above == e) {
                    continue;
                }
            }
        }
        grid[r][i] = e;
        fill_shifted(lambda, k, r, i + 1, grid, emit);
    }
}

/// One term of a doubled Schur expansion: c * s_mu(x) * s_nu(y).
pub type SchurTerm = (Partition, Partition, BigInt);

/// Expand a doubly symmetric, t-free polynomial in products of Schur
/// polynomials of the two alphabets by repeatedly peeling the
/// lexicographically greatest monomial.
pub fn expand_in_schur(p: &MultiPoly) -> Result<Vec<SchurTerm>> {
    if p.uses_t() {
        return Err(Error::Expansion("polynomial still involves t".into()));
    }
    p.check_symmetric()?;
    let k = p.k();
    let mut rest = p.clone();
    let mut out: Vec<SchurTerm> = Vec::new();
    while !rest.is_zero() {
        let (m, c) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mu = exps_to_partition(&m.x)?;
        let nu = exps_to_partition(&m.y)?;
        let prod = schur(&mu, k).mul(&schur_y(&nu, k));
        rest = rest.sub(&prod.scale(&c));
        out.push((mu, nu, c));
    }
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    Ok(out)
}

/// Expand a symmetric polynomial in one alphabet in Schur polynomials.
pub fn expand_in_schur_x(p: &MultiPoly) -> Result<Vec<(Partition, BigInt)>> {
    if p.uses_y() {
        return Err(Error::Expansion("polynomial still involves y".into()));
    }
    Ok(expand_in_schur(p)?
        .into_iter()
        .map(|(mu, _, c)| (mu, c))
        .collect())
}

/// Expand a symmetric polynomial in one alphabet in Schur P-polynomials.
/// Fails with `NotStrict` when a leading monomial is not a strict
/// partition, i.e. the input lies outside the span of the P's.
pub fn expand_in_schur_p(p: &MultiPoly) -> Result<Vec<(Partition, BigInt)>> {
    if p.uses_t() {
        return Err(Error::Expansion("polynomial still involves t".into()));
    }
    if p.uses_y() {
        return Err(Error::Expansion("polynomial still involves y".into()));
    }
    p.check_symmetric()?;
    let k = p.k();
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (m, c) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mu = exps_to_partition(&m.x)?;
        rest = rest.sub(&schur_p(&mu, k)?.scale(&c));
        out.push((mu, c));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn exps_to_partition(exps: &[u16]) -> Result<Partition> {
    let parts: Vec<u32> = exps.iter().map(|&e| e as u32).collect();
    Partition::new(parts).map_err(|_| {
        Error::Expansion(format!(
            "leading exponent vector {exps:?} is not a partition; polynomial is not symmetric"
        ))
    })
}

/// Rebuild a polynomial from a doubled Schur expansion.
pub fn poly_from_schur_terms(terms: &[SchurTerm], k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(k);
    for (mu, nu, c) in terms {
        out = out.add(&schur(mu, k).mul(&schur_y(nu, k)).scale(c));
    }
    out
}

/// Apply the involution that transposes shapes, to the x-side of a
/// doubled expansion.
pub fn omega_x(terms: &[SchurTerm]) -> Vec<SchurTerm> {
    let mut out: Vec<SchurTerm> = terms
        .iter()
        .map(|(mu, nu, c)| (mu.conjugate(), nu.clone(), c.clone()))
        .collect();
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    out
}

/// Render a doubled Schur expansion as JSON.
pub fn schur_terms_to_json(terms: &[SchurTerm]) -> Result<serde_json::Value> {
    let mut arr = Vec::new();
    for (mu, nu, c) in terms {
        let c = c
            .to_i64()
            .ok_or_else(|| Error::Domain("coefficient does not fit in 64 bits".into()))?;
        arr.push(json!({ "mu": mu.parts(), "nu": nu.parts(), "c": c }));
    }
    Ok(serde_json::Value::Array(arr))
}
