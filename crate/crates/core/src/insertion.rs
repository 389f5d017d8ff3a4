//! Insertion algorithms.
//!
//! Two insertion procedures are implemented here.  Edelman-Greene row
//! insertion turns a reduced word into an increasing tableau; together with
//! a primed recording tableau it encodes a block factorization of a reduced
//! word, and the encoding is reversible.  Haiman's mixed insertion sends a
//! word over the primed alphabet to a primed tableau plus a standard
//! recording tableau, and extends to skew shapes by vacating an inner
//! corner.

use std::collections::BTreeSet;

use crate::coxeter::{SignedPermutation, Word, REDUCED_WORD_CAP};
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::partition::Partition;
use crate::tableau::{Entry, Tableau};

/// Edelman-Greene insertion of one letter; returns the cell that was added.
///
/// The bump replaces the leftmost strictly larger letter, except that when
/// that letter is `a + 1` and `a` is already present the row is left alone
/// and `a + 1` is carried to the next row.
fn eg_bump(rows: &mut Vec<Vec<u32>>, mut a: u32) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![a]);
            return (r, 0);
        }
        match rows[r].iter().position(|&b| b > a) {
            None => {
                rows[r].push(a);
                return (r, rows[r].len() - 1);
            }
            Some(p) => {
                let b = rows[r][p];
                if b == a + 1 && rows[r].contains(&a) {
                    a = b;
                } else {
                    rows[r][p] = a;
                    a = b;
                }
                r += 1;
            }
        }
    }
}

/// One reverse Edelman-Greene step: remove the outer corner `(r, c)` and
/// unbump upward, returning the letter that falls out of the top row.
fn eg_reverse(rows: &mut Vec<Vec<u32>>, r: usize, c: usize) -> Result<u32> {
    let corner = r < rows.len()
        && c + 1 == rows[r].len()
        && (r + 1 == rows.len() || rows[r + 1].len() <= c);
    if !corner {
        return Err(Error::ReverseInsertion(format!(
            "cell ({r},{c}) is not an outer corner"
        )));
    }
    let mut y = rows[r].pop().unwrap();
    if rows[r].is_empty() {
        rows.pop();
    }
    for i in (0..r).rev() {
        let p = rows[i]
            .iter()
            .rposition(|&z| z < y)
            .ok_or_else(|| Error::ReverseInsertion(format!("no letter below {y} in row {i}")))?;
        let z = rows[i][p];
        if z + 1 == y && rows[i].contains(&y) {
            y = z;
        } else {
            rows[i][p] = y;
            y = z;
        }
    }
    Ok(y)
}

fn rows_to_tableau(rows: &[Vec<u32>]) -> Tableau {
    let entries = rows
        .iter()
        .map(|row| row.iter().map(|&l| Entry::plain(l)).collect())
        .collect();
    Tableau::straight(entries).expect("insertion rows form a straight shape")
}

/// Insert a word letter by letter, returning the insertion tableau and the
/// cell added at each step.  The word is not required to be reduced; callers
/// that need reducedness must check it themselves.
pub fn eg_insert(word: &Word) -> (Tableau, Vec<(usize, usize)>) {
    let mut rows = Vec::new();
    let cells = word
        .letters()
        .iter()
        .map(|&l| eg_bump(&mut rows, l as u32))
        .collect();
    (rows_to_tableau(&rows), cells)
}

/// The set of insertion tableaux over all reduced words of `w`.
pub fn eg_tableaux(w: &SignedPermutation) -> Result<BTreeSet<Tableau>> {
    let words = w.reduced_words(REDUCED_WORD_CAP)?;
    Ok(words.iter().map(|word| eg_insert(word).0).collect())
}

/// The same set from the definition: increasing tableaux whose reading word
/// (bottom row to top, left to right) is reduced for `w`.  Exponentially
/// slower; kept as an independent cross-check of [`eg_tableaux`].
pub fn eg_tableaux_direct(w: &SignedPermutation) -> Result<BTreeSet<Tableau>> {
    let len = w.length();
    let n = w.n();
    let max_letter = (n - 1) as u32;
    let mut out = BTreeSet::new();
    for shape in Partition::all_of_size(len as u32, len.max(1)) {
        let mut rows: Vec<Vec<u32>> = (0..shape.len())
            .map(|r| vec![0; shape.part(r) as usize])
            .collect();
        fill_increasing(&mut rows, &shape, 0, 0, max_letter, w, &mut out)?;
    }
    Ok(out)
}

fn fill_increasing(
    rows: &mut Vec<Vec<u32>>,
    shape: &Partition,
    r: usize,
    c: usize,
    max_letter: u32,
    w: &SignedPermutation,
    out: &mut BTreeSet<Tableau>,
) -> Result<()> {
    if r == shape.len() {
        let letters: Vec<u8> = (0..rows.len())
            .rev()
            .flat_map(|i| rows[i].iter().map(|&l| l as u8))
            .collect();
        let word = Word(letters);
        if SignedPermutation::evaluate(&word, w.n())? == *w {
            out.insert(rows_to_tableau(rows));
        }
        return Ok(());
    }
    let (nr, nc) = if c + 1 < shape.part(r) as usize {
        (r, c + 1)
    } else {
        (r + 1, 0)
    };
    let lo_row = if c > 0 { rows[r][c - 1] + 1 } else { 0 };
    let lo_col = if r > 0 && c < shape.part(r - 1) as usize {
        rows[r - 1][c] + 1
    } else {
        0
    };
    let lo = lo_row.max(lo_col).max(if w.is_type_a() { 1 } else { 0 });
    for l in lo..=max_letter {
        rows[r][c] = l;
        fill_increasing(rows, shape, nr, nc, max_letter, w, out)?;
    }
    Ok(())
}

/// Run the recording map one letter at a time: Edelman-Greene insertion of
/// the unsigned letters, with each new cell of the recording tableau labeled
/// by its block number, primed when the letter was barred.  Returns the pair
/// after every letter.
pub fn primed_recording_steps(v: &Factorization) -> Result<Vec<(Tableau, Tableau)>> {
    let word = v.flattened_word();
    let n = word.letters().iter().max().map_or(1, |&m| m as usize + 1);
    if SignedPermutation::evaluate(&word, n)?.length() != word.len() {
        return Err(Error::NotReduced);
    }
    let mut prows: Vec<Vec<u32>> = Vec::new();
    let mut qrows: Vec<Vec<Entry>> = Vec::new();
    let mut steps = Vec::with_capacity(word.len());
    for (idx, block) in v.blocks().iter().enumerate() {
        let label = idx as u32 + 1;
        for &l in block {
            let (r, c) = eg_bump(&mut prows, l.unsigned_abs() as u32);
            if r == qrows.len() {
                qrows.push(Vec::new());
            }
            debug_assert_eq!(qrows[r].len(), c);
            qrows[r].push(if l < 0 {
                Entry::primed(label)
            } else {
                Entry::plain(label)
            });
            steps.push((rows_to_tableau(&prows), Tableau::straight(qrows.clone())?));
        }
    }
    Ok(steps)
}

/// The recording map: a block factorization with reduced underlying word
/// goes to its insertion tableau and primed recording tableau.
pub fn primed_recording(v: &Factorization) -> Result<(Tableau, Tableau)> {
    let steps = primed_recording_steps(v)?;
    Ok(steps.into_iter().last().unwrap_or((Tableau::empty(), Tableau::empty())))
}

/// Invert the recording map.  Cells of `q` are unbumped from `p` in reverse
/// standardization order: blocks from the last to the first, and inside a
/// block the plain labels right to left, then the primed labels bottom to
/// top.  Barred letters are reattached to cells with primed labels.
pub fn inverse_primed_recording(p: &Tableau, q: &Tableau, k: usize) -> Result<Factorization> {
    if p.shape() != q.shape() || p.is_skew() {
        return Err(Error::ShapeMismatch);
    }
    q.validate_marked(k as u32, k as u32)?;
    let mut rows: Vec<Vec<u32>> = (0..p.num_rows())
        .map(|r| p.row(r).iter().map(|e| e.letter()).collect())
        .collect();
    let mut blocks = vec![Vec::new(); k];
    for label in (1..=k as u32).rev() {
        let mut plain: Vec<(usize, usize)> = Vec::new();
        let mut primed: Vec<(usize, usize)> = Vec::new();
        for (r, c) in q.cells() {
            let e = q.get(r, c).unwrap();
            if e.letter() == label {
                if e.is_primed() {
                    primed.push((r, c));
                } else {
                    plain.push((r, c));
                }
            }
        }
        plain.sort_by_key(|&(_, c)| std::cmp::Reverse(c));
        primed.sort_by_key(|&(r, _)| std::cmp::Reverse(r));
        for (r, c) in plain {
            let letter = eg_reverse(&mut rows, r, c)?;
            blocks[label as usize - 1].push(letter as i16);
        }
        for (r, c) in primed {
            let letter = eg_reverse(&mut rows, r, c)?;
            blocks[label as usize - 1].push(-(letter as i16));
        }
    }
    if rows.iter().any(|r| !r.is_empty()) {
        return Err(Error::ReverseInsertion(
            "recording tableau does not exhaust the insertion tableau".into(),
        ));
    }
    for block in &mut blocks {
        block.sort_unstable();
    }
    Ok(Factorization::new(blocks))
}

/// A pending insertion: an entry headed for a row or for a column.
enum Pending {
    Row(Entry, usize),
    Col(Entry, usize),
}

/// Carry out mixed insertion until the pending entry settles, returning the
/// cell that was added.  Unprimed entries bump along rows and move down;
/// primed entries bump along columns and move right.
fn settle(t: &mut Tableau, mut pending: Pending) -> Result<(usize, usize)> {
    loop {
        pending = match pending {
            Pending::Row(e, r) => {
                let hit = (t.row_start(r)..t.row_end(r)).find(|&c| t.get(r, c).unwrap() > e);
                match hit {
                    None => {
                        let c = t.row_end(r);
                        t.add_cell(r, c, e)?;
                        return Ok((r, c));
                    }
                    Some(c) => {
                        let old = t.get(r, c).unwrap();
                        t.set(r, c, e);
                        if old.is_primed() {
                            Pending::Col(old, c + 1)
                        } else {
                            Pending::Row(old, r + 1)
                        }
                    }
                }
            }
            Pending::Col(e, c) => {
                let filled: Vec<usize> = (0..t.num_rows())
                    .filter(|&r| t.contains_cell(r, c))
                    .collect();
                let hit = filled.iter().copied().find(|&r| t.get(r, c).unwrap() > e);
                match hit {
                    None => {
                        let r = match filled.last() {
                            Some(&last) => last + 1,
                            None => (0..t.num_rows()).filter(|&r| t.row_start(r) > c).count(),
                        };
                        t.add_cell(r, c, e)?;
                        return Ok((r, c));
                    }
                    Some(r) => {
                        let old = t.get(r, c).unwrap();
                        t.set(r, c, e);
                        if old.is_primed() {
                            Pending::Col(old, c + 1)
                        } else {
                            Pending::Row(old, r + 1)
                        }
                    }
                }
            }
        };
    }
}

/// Haiman's mixed insertion of a word over the primed alphabet: unprimed
/// letters enter the first row, primed letters the first column.  Returns
/// the primed insertion tableau and the standard recording tableau.
pub fn mixed_insert(word: &[Entry]) -> Result<(Tableau, Tableau)> {
    let mut p = Tableau::empty();
    let mut srows: Vec<Vec<Entry>> = Vec::new();
    for (idx, &e) in word.iter().enumerate() {
        if e.is_barred() || e.is_zero() {
            return Err(Error::Alphabet(format!(
                "mixed insertion takes primed or plain letters, got {e}"
            )));
        }
        let start = if e.is_primed() {
            Pending::Col(e, 0)
        } else {
            Pending::Row(e, 0)
        };
        let (r, c) = settle(&mut p, start)?;
        if r == srows.len() {
            srows.push(Vec::new());
        }
        debug_assert_eq!(srows[r].len(), c);
        srows[r].push(Entry::plain(idx as u32 + 1));
    }
    Ok((p, Tableau::straight(srows)?))
}

/// Vacate an inner corner of a skew tableau: remove its entry and let it
/// continue the insertion as if it had just been bumped.
pub fn vacate(t: &Tableau, r: usize, c: usize) -> Result<Tableau> {
    let mut out = t.clone();
    let e = out.remove_inner_corner(r, c)?;
    let pending = if e.is_primed() {
        Pending::Col(e, c + 1)
    } else {
        Pending::Row(e, r + 1)
    };
    settle(&mut out, pending)?;
    Ok(out)
}

/// Raise every letter of a word by half a unit.
pub fn word_plus(word: &[Entry]) -> Result<Vec<Entry>> {
    word.iter().map(|e| e.up()).collect()
}

/// Lower every letter of a word by half a unit.
pub fn word_minus(word: &[Entry]) -> Result<Vec<Entry>> {
    word.iter().map(|e| e.down()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::all_elements;
    use crate::factorization::{enumerate_factorizations, FactorKind};

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn recording_map_nine_steps() {
        let v: Factorization = "(-3,-2,1,4)(-3,-2)(-4,1,3)".parse().unwrap();
        let steps = primed_recording_steps(&v).unwrap();
        let expected = [
            ("3", "1'"),
            ("2 / 3", "1' / 1'"),
            ("1 / 2 / 3", "1' / 1' / 1"),
            ("1 4 / 2 / 3", "1' 1 / 1' / 1"),
            ("1 3 / 2 4 / 3", "1' 1 / 1' 2' / 1"),
            ("1 2 / 2 3 / 3 4", "1' 1 / 1' 2' / 1 2'"),
            ("1 2 4 / 2 3 / 3 4", "1' 1 3' / 1' 2' / 1 2'"),
            ("1 2 4 / 2 3 / 3 4 / 4", "1' 1 3' / 1' 2' / 1 2' / 3"),
            ("1 2 3 / 2 3 4 / 3 4 / 4", "1' 1 3' / 1' 2' 3 / 1 2' / 3"),
        ];
        assert_eq!(steps.len(), expected.len());
        for (step, (p, q)) in steps.iter().zip(expected) {
            assert_eq!(step.0, t(p));
            assert_eq!(step.1, t(q));
        }
    }

    #[test]
    fn recording_map_rejects_unreduced() {
        let v: Factorization = "(1)(1)".parse().unwrap();
        assert!(matches!(primed_recording(&v), Err(Error::NotReduced)));
    }

    #[test]
    fn insertion_tableaux_of_a_small_element() {
        let w = SignedPermutation::evaluate(&Word(vec![1, 2, 1]), 3).unwrap();
        let e = eg_tableaux(&w).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e.contains(&t("1 2 / 2")));
    }

    #[test]
    fn insertion_tableaux_match_direct_enumeration() {
        for w in all_elements(4, false, usize::MAX) {
            assert_eq!(
                eg_tableaux(&w).unwrap(),
                eg_tableaux_direct(&w).unwrap(),
                "mismatch for {w}"
            );
        }
    }

    #[test]
    fn ascent_direction_of_new_cells() {
        // letters rise exactly when the next cell lands weakly above
        for w in all_elements(4, false, usize::MAX) {
            for word in w.reduced_words(REDUCED_WORD_CAP).unwrap() {
                let (_, cells) = eg_insert(&word);
                for s in 0..word.len().saturating_sub(1) {
                    let ascent = word.letters()[s] < word.letters()[s + 1];
                    assert_eq!(ascent, cells[s + 1].0 <= cells[s].0);
                }
            }
        }
    }

    #[test]
    fn recording_map_round_trip() {
        for w in all_elements(3, false, usize::MAX) {
            for k in 1..=2usize {
                for v in enumerate_factorizations(&w, FactorKind::D, k, 100_000).unwrap() {
                    let (p, q) = primed_recording(&v).unwrap();
                    assert_eq!(p.shape(), q.shape());
                    q.validate_marked(k as u32, k as u32).unwrap();
                    let back = inverse_primed_recording(&p, &q, k).unwrap();
                    assert_eq!(back, v, "round trip failed for {v}");
                }
            }
        }
    }

    #[test]
    fn recording_map_is_injective() {
        let w = SignedPermutation::evaluate(&Word(vec![1, 2, 1]), 3).unwrap();
        let vs = enumerate_factorizations(&w, FactorKind::D, 2, 100_000).unwrap();
        let images: BTreeSet<(Tableau, Tableau)> = vs
            .iter()
            .map(|v| primed_recording(v).unwrap())
            .collect();
        assert_eq!(images.len(), vs.len());
    }

    #[test]
    fn mixed_insertion_properties() {
        // all words of length 3 over the primed alphabet with two letters
        let alphabet = [
            Entry::primed(1),
            Entry::plain(1),
            Entry::primed(2),
            Entry::plain(2),
        ];
        let mut images = BTreeSet::new();
        let mut count = 0;
        for &a in &alphabet {
            for &b in &alphabet {
                for &c in &alphabet {
                    let word = vec![a, b, c];
                    let (p, s) = mixed_insert(&word).unwrap();
                    p.validate_marked(2, 2).unwrap();
                    assert!(s.is_standard());
                    assert_eq!(p.shape(), s.shape());

                    let plus = mixed_insert(&word_plus(&word).unwrap()).unwrap().0;
                    assert_eq!(plus, p.plus_transform().unwrap());

                    images.insert((p, s));
                    count += 1;
                }
            }
        }
        assert_eq!(images.len(), count);
    }

    #[test]
    fn vacate_moves_an_inner_corner() {
        let start = t(". 2 2 / 2 3' 3 / 3'");
        let vacated = vacate(&start, 0, 1).unwrap();
        assert_eq!(vacated, t(". . 2 / 2 2 3' / 3' 3"));
        // (2,0) sits below a filled cell and (0,2) is mid-row
        assert!(vacate(&start, 2, 0).is_err());
        assert!(vacate(&start, 0, 2).is_err());
    }

    #[test]
    fn reverse_insertion_rejects_corrupt_recording() {
        let p = t("1 2 / 2");
        assert!(inverse_primed_recording(&p, &t("1 1 / 1"), 1).is_err());
        assert!(inverse_primed_recording(&p, &t("1 1"), 1).is_err());
    }
}
