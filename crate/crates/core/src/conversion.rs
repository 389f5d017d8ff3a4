//! Letter-by-letter conversion between the primed and barred encodings of a
//! marked tableau.  Moving one level inward rewrites every primed `j` as a
//! barred `j` and restores order by a bubble pass; outward conversion is the
//! exact inverse.  Composing over all letters gives a double-weight
//! preserving bijection between primed tableaux and signed tableaux.

use crate::error::{Error, Result};
use crate::tableau::{Entry, Tableau};

/// True when every row (left to right) and column (top to bottom) is weakly
/// increasing in the full alphabet order.
fn weakly_increasing(t: &Tableau) -> bool {
    for (r, c) in t.cells() {
        let e = t.get(r, c).unwrap();
        if let Some(east) = t.get(r, c + 1) {
            if east < e {
                return false;
            }
        }
        if let Some(south) = t.get(r + 1, c) {
            if south < e {
                return false;
            }
        }
    }
    true
}

/// Cell of the uppermost occurrence of `target`, scanning rows top to
/// bottom.
fn uppermost(t: &Tableau, target: Entry) -> Option<(usize, usize)> {
    t.cells().find(|&(r, c)| t.get(r, c) == Some(target))
}

/// Cell of the lowermost occurrence of `target`, scanning rows bottom to
/// top.
fn lowermost(t: &Tableau, target: Entry) -> Option<(usize, usize)> {
    let cells: Vec<_> = t.cells().collect();
    cells
        .into_iter()
        .rev()
        .find(|&(r, c)| t.get(r, c) == Some(target))
}

// Bubble passes strictly shrink (or grow) the moving cell's row plus column
// index, so this many iterations means the rules were applied to a tableau
// outside their domain.
fn step_budget(t: &Tableau) -> usize {
    t.num_cells() + t.num_rows() + 2
}

/// One inward application at `letter`: the uppermost primed `letter` becomes
/// barred, then the lowermost barred `letter` is switched with the entry
/// above or to its left until order is restored.
pub fn inward_step(t: &Tableau, letter: u32) -> Result<Tableau> {
    if letter == 0 {
        return Err(Error::Conversion("letter must be positive".into()));
    }
    let primed = Entry::primed(letter);
    let barred = Entry::barred(letter);
    let Some((r, c)) = uppermost(t, primed) else {
        return Err(Error::Conversion(format!(
            "no primed {letter} to convert in {t}"
        )));
    };
    let mut out = t.clone();
    out.set(r, c, barred);
    let mut budget = step_budget(t);
    while !weakly_increasing(&out) {
        if budget == 0 {
            return Err(Error::Conversion(format!(
                "inward pass failed to settle on {t}"
            )));
        }
        budget -= 1;
        let (r, c) = lowermost(&out, barred)
            .ok_or_else(|| Error::Conversion("moving entry vanished".into()))?;
        let above = r.checked_sub(1).map(|n| (n, c));
        let left = c.checked_sub(1).map(|w| (r, w));
        let above_e = above.and_then(|(rr, cc)| out.get(rr, cc));
        let left_e = left.and_then(|(rr, cc)| out.get(rr, cc));
        let pick = match (above_e, left_e) {
            (Some(_), None) => above.unwrap(),
            (None, Some(_)) => left.unwrap(),
            (Some(a), Some(l)) => {
                if a != l {
                    if a > l {
                        above.unwrap()
                    } else {
                        left.unwrap()
                    }
                } else if a.is_marked() {
                    left.unwrap()
                } else {
                    above.unwrap()
                }
            }
            (None, None) => {
                return Err(Error::Conversion(format!(
                    "no entry to switch with at ({r},{c})"
                )))
            }
        };
        let other = out.get(pick.0, pick.1).unwrap();
        out.set(r, c, other);
        out.set(pick.0, pick.1, barred);
    }
    Ok(out)
}

/// One outward application at `letter`: the lowermost barred `letter`
/// becomes primed, then the uppermost primed `letter` is switched with the
/// entry below or to its right until order is restored.
pub fn outward_step(t: &Tableau, letter: u32) -> Result<Tableau> {
    if letter == 0 {
        return Err(Error::Conversion("letter must be positive".into()));
    }
    let primed = Entry::primed(letter);
    let barred = Entry::barred(letter);
    let Some((r, c)) = lowermost(t, barred) else {
        return Err(Error::Conversion(format!(
            "no barred {letter} to convert in {t}"
        )));
    };
    let mut out = t.clone();
    out.set(r, c, primed);
    let mut budget = step_budget(t);
    while !weakly_increasing(&out) {
        if budget == 0 {
            return Err(Error::Conversion(format!(
                "outward pass failed to settle on {t}"
            )));
        }
        budget -= 1;
        let (r, c) = uppermost(&out, primed)
            .ok_or_else(|| Error::Conversion("moving entry vanished".into()))?;
        let below = out.get(r + 1, c).map(|_| (r + 1, c));
        let right = out.get(r, c + 1).map(|_| (r, c + 1));
        let below_e = below.map(|(rr, cc)| out.get(rr, cc).unwrap());
        let right_e = right.map(|(rr, cc)| out.get(rr, cc).unwrap());
        let pick = match (below_e, right_e) {
            (Some(_), None) => below.unwrap(),
            (None, Some(_)) => right.unwrap(),
            (Some(b), Some(rt)) => {
                if b != rt {
                    if b < rt {
                        below.unwrap()
                    } else {
                        right.unwrap()
                    }
                } else if b.is_marked() {
                    right.unwrap()
                } else {
                    below.unwrap()
                }
            }
            (None, None) => {
                return Err(Error::Conversion(format!(
                    "no entry to switch with at ({r},{c})"
                )))
            }
        };
        let other = out.get(pick.0, pick.1).unwrap();
        out.set(r, c, other);
        out.set(pick.0, pick.1, primed);
    }
    Ok(out)
}

/// Move from level `j` to level `j - 1`: every primed `j` becomes barred.
pub fn convert_inward(t: &Tableau, j: u32) -> Result<Tableau> {
    if j == 0 {
        return Err(Error::Conversion("cannot convert inward from level 0".into()));
    }
    let times = t
        .entries()
        .filter(|&e| e == Entry::primed(j))
        .count();
    let mut out = t.clone();
    for _ in 0..times {
        out = inward_step(&out, j)?;
    }
    Ok(out)
}

/// Move from level `j` to level `j + 1`: every barred `j + 1` becomes
/// primed.
pub fn convert_outward(t: &Tableau, j: u32) -> Result<Tableau> {
    let letter = j + 1;
    let times = t
        .entries()
        .filter(|&e| e == Entry::barred(letter))
        .count();
    let mut out = t.clone();
    for _ in 0..times {
        out = outward_step(&out, letter)?;
    }
    Ok(out)
}

/// Full descent from level `k` (all marks primed) to level `0` (all marks
/// barred).
pub fn primed_to_signed(t: &Tableau, k: u32) -> Result<Tableau> {
    let mut out = t.clone();
    for j in (1..=k).rev() {
        out = convert_inward(&out, j)?;
    }
    Ok(out)
}

/// Full ascent from level `0` back to level `k`; inverse of
/// [`primed_to_signed`].
pub fn signed_to_primed(t: &Tableau, k: u32) -> Result<Tableau> {
    let mut out = t.clone();
    for j in 0..k {
        out = convert_outward(&out, j)?;
    }
    Ok(out)
}
