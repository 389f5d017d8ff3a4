//! The Stanley symmetric polynomials of a signed permutation, computed
//! along independent routes: directly from block factorizations, as a sum
//! of tableau generating functions over Edelman-Greene insertion tableaux,
//! and through the highest-weight Schur expansion of the tableau crystal.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::coxeter::SignedPermutation;
use crate::crystal::highest_weights;
use crate::error::{Error, Result};
use crate::factorization::{enumerate_factorizations, FactorKind};
use crate::insertion::eg_tableaux;
use crate::partition::Partition;
use crate::symfunc::{schur, schur_skew_axis, schur_y, Axis, Monomial, MultiPoly, SchurTerm};
use crate::tableau::enumerate_marked;

/// Default guard for reduced-word enumeration.
pub const DEFAULT_LENGTH_CAP: usize = crate::coxeter::REDUCED_WORD_CAP;

/// Sum of `x^wt` over reduced increasing factorizations into `k` blocks.
/// Only defined for elements with an all-positive window.
pub fn type_a(w: &SignedPermutation, k: usize, cap: usize) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(k);
    for f in enumerate_factorizations(w, FactorKind::A, k, cap)? {
        p.add_term(Monomial::new(f.weight(), Vec::new(), 0), BigInt::from(1));
    }
    Ok(p)
}

/// Sum of `2^{ne(v)} x^wt` over reduced unimodal factorizations into `k`
/// blocks, `ne` counting the nonempty blocks.
pub fn type_c(w: &SignedPermutation, k: usize, cap: usize) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(k);
    for f in enumerate_factorizations(w, FactorKind::C, k, cap)? {
        p.add_term(
            Monomial::new(f.weight(), Vec::new(), 0),
            BigInt::from(1) << f.nonempty_blocks(),
        );
    }
    Ok(p)
}

/// Sum of `x^{dw1} y^{dw2}` over reduced signed increasing factorizations
/// into `k` blocks.
pub fn double(w: &SignedPermutation, k: usize, cap: usize) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(k);
    for f in enumerate_factorizations(w, FactorKind::D, k, cap)? {
        let (bars, plains) = f.double_weight();
        p.add_term(Monomial::new(bars, plains, 0), BigInt::from(1));
    }
    Ok(p)
}

/// Double-weight generating function of one marking level of a shape.
pub fn tableau_gf(
    outer: &Partition,
    inner: &Partition,
    k: usize,
    level: u32,
) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(k);
    for t in enumerate_marked(outer, inner, k as u32, level)? {
        p.add_term(t.double_weight(k as u32), BigInt::from(1));
    }
    Ok(p)
}

/// All partitions `nu` with `inner` contained in `nu` contained in `outer`.
fn partitions_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    fn rec(
        row: usize,
        prev: u32,
        inner: &Partition,
        outer: &Partition,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == outer.len() {
            let parts: Vec<u32> = acc.clone();
            out.push(Partition::new(parts).expect("rows are weakly decreasing"));
            return;
        }
        let hi = outer.part(row).min(prev);
        for v in inner.part(row)..=hi {
            acc.push(v);
            rec(row + 1, v, inner, outer, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        u32::MAX,
        inner,
        outer,
        &mut Vec::with_capacity(outer.len()),
        &mut out,
    );
    out
}

/// Supersymmetric skew Schur polynomial `s_{outer/inner}(x/y)`: apply the
/// conjugating involution to the x-part of the doubled-alphabet expansion,
/// giving the branching sum over intermediate shapes `nu` of
/// `s_{nu'/inner'}(x) * s_{outer/nu}(y)`.
pub fn super_schur(outer: &Partition, inner: &Partition, k: usize) -> Result<MultiPoly> {
    if !outer.contains(inner) {
        return Err(Error::BadTableau(format!(
            "{inner} is not contained in {outer}"
        )));
    }
    let mut total = MultiPoly::zero(k);
    let inner_conj = inner.conjugate();
    for nu in partitions_between(inner, outer) {
        let xs = schur_skew_axis(&nu.conjugate(), &inner_conj, k, Axis::X)?;
        let ys = schur_skew_axis(outer, &nu, k, Axis::Y)?;
        total = total.add(&xs.mul(&ys));
    }
    Ok(total)
}

/// The double Stanley polynomial as a sum of primed-tableau generating
/// functions over the insertion tableaux of the element's reduced words.
pub fn double_via_tableaux(w: &SignedPermutation, k: usize) -> Result<MultiPoly> {
    if !w.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let mut total = MultiPoly::zero(k);
    for p in eg_tableaux(w)? {
        let (outer, inner) = p.shape();
        total = total.add(&tableau_gf(&outer, &inner, k, k as u32)?);
    }
    Ok(total)
}

/// The double Stanley polynomial as a sum of supersymmetric Schur
/// polynomials over the insertion shapes: the type A expansion read in the
/// quotient alphabet.
pub fn double_via_super(w: &SignedPermutation, k: usize) -> Result<MultiPoly> {
    if !w.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let empty = Partition::empty();
    let mut total = MultiPoly::zero(k);
    for p in eg_tableaux(w)? {
        let (outer, _) = p.shape();
        total = total.add(&super_schur(&outer, &empty, k)?);
    }
    Ok(total)
}

fn weight_partition(weight: Vec<u32>) -> Result<Partition> {
    Partition::new(weight)
}

/// The doubled Schur expansion of the double Stanley polynomial, read off
/// the doubly-highest-weight tableaux of each insertion shape: one
/// `(mu, nu, count)` term per weight pair.
pub fn double_schur_terms_via_crystal(
    w: &SignedPermutation,
    k: usize,
) -> Result<Vec<SchurTerm>> {
    if !w.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let mut counts: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    for p in eg_tableaux(w)? {
        let (outer, inner) = p.shape();
        for s in highest_weights(&outer, &inner, k as u32)? {
            let x = weight_partition(s.weight_marked(k as u32))?;
            let y = weight_partition(s.weight_plain(k as u32))?;
            *counts.entry((x, y)).or_default() += 1;
        }
    }
    Ok(counts
        .into_iter()
        .map(|((mu, nu), c)| (mu, nu, c))
        .collect())
}

/// The double Stanley polynomial reconstructed from the crystal expansion.
pub fn double_via_crystal(w: &SignedPermutation, k: usize) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero(k);
    for (mu, nu, c) in double_schur_terms_via_crystal(w, k)? {
        total = total.add(&schur(&mu, k).mul(&schur_y(&nu, k)).scale(&c));
    }
    Ok(total)
}
