//! Letter-pattern classification of signed permutations, signed
//! Edelman-Greene tableaux, and exact two-sided evaluation of the three
//! Schur expansion conjectures those tableaux support.  Evaluations report
//! their findings instead of asserting them: a mismatch is a result.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use crate::coxeter::{SignedPermutation, Word};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stanley::{double, type_c};
use crate::symfunc::expand_in_schur_x;
use crate::tableau::{Entry, Tableau};

/// How "the pattern appears in the word" is read: as a run of adjacent
/// letters or as a scattered subsequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PatternReading {
    #[default]
    Factor,
    Subsequence,
}

impl PatternReading {
    pub fn occurs(self, word: &[u8], pattern: &[u8]) -> bool {
        match self {
            PatternReading::Factor => {
                word.len() >= pattern.len() && word.windows(pattern.len()).any(|w| w == pattern)
            }
            PatternReading::Subsequence => {
                let mut rest = pattern;
                for &x in word {
                    match rest.first() {
                        Some(&p) if p == x => rest = &rest[1..],
                        Some(_) => {}
                        None => break,
                    }
                }
                rest.is_empty()
            }
        }
    }
}

impl fmt::Display for PatternReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternReading::Factor => write!(f, "factor"),
            PatternReading::Subsequence => write!(f, "subsequence"),
        }
    }
}

fn word_is_unknotted(letters: &[u8], reading: PatternReading) -> bool {
    if reading.occurs(letters, &[0, 1, 0, 1]) && letters.contains(&2) {
        return false;
    }
    let max = letters.iter().copied().max().unwrap_or(0);
    for i in 1..=max.saturating_sub(2) {
        if reading.occurs(letters, &[i, i + 1, i]) && letters.contains(&(i + 2)) {
            return false;
        }
    }
    true
}

/// An element is unknotted when every reduced word avoids the letter 2
/// whenever it shows the pattern 0,1,0,1 and avoids the letter i+2
/// whenever it shows the pattern i,i+1,i for some i >= 1.
pub fn is_unknotted(w: &SignedPermutation, reading: PatternReading, cap: usize) -> Result<bool> {
    for word in w.reduced_words(cap)? {
        if !word_is_unknotted(word.letters(), reading) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The stricter classification: every reduced word avoids the letter 2
/// outright, and whenever letters i and i+1 both occur for some i >= 3
/// with one of them repeated, the letters i-1 and i+2 stay out.
pub fn is_untangled(w: &SignedPermutation, cap: usize) -> Result<bool> {
    for word in w.reduced_words(cap)? {
        let letters = word.letters();
        if letters.contains(&2) {
            return Ok(false);
        }
        let max = letters.iter().copied().max().unwrap_or(0);
        for i in 3..max {
            let lo = letters.iter().filter(|&&x| x == i).count();
            let hi = letters.iter().filter(|&&x| x == i + 1).count();
            if lo >= 1
                && hi >= 1
                && (lo > 1 || hi > 1)
                && (letters.contains(&(i - 1)) || letters.contains(&(i + 2)))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of 0 letters in a reduced word, checked to be the same for
/// every reduced word before it is returned.
pub fn ze(w: &SignedPermutation, cap: usize) -> Result<usize> {
    let words = w.reduced_words(cap)?;
    let mut counts = words.iter().map(Word::zero_count);
    let first = counts.next().unwrap_or(0);
    for c in counts {
        if c != first {
            return Err(Error::Domain(format!(
                "zero letter count differs across reduced words of {w}: {first} vs {c}"
            )));
        }
    }
    Ok(first)
}

/// Exact check that doubling once per 0 letter turns the diagonal of the
/// two-alphabet series into the unimodal one: 2^ze * F^d(x,x) = F^C(x).
pub fn verify_2ze_relation(w: &SignedPermutation, k: usize, cap: usize) -> Result<bool> {
    let e = ze(w, cap)?;
    let lhs = double(w, k, cap)?
        .specialize_y_to_x()
        .scale(&(BigInt::from(1) << e));
    Ok(lhs == type_c(w, k, cap)?)
}

fn reading_word(t: &Tableau) -> Word {
    let mut letters = Vec::with_capacity(t.num_cells());
    for r in (0..t.num_rows()).rev() {
        letters.extend(t.row(r).iter().map(|e| e.letter() as u8));
    }
    Word(letters)
}

/// Every equal vertical pair must sit next to a letter one larger, either
/// rightward in the lower row or leftward in the upper row, or be a pair
/// of barred 1s followed by a column holding a pair of 0s.
fn repeats_licensed(t: &Tableau) -> bool {
    for r in 0..t.num_rows().saturating_sub(1) {
        for c in 0..t.row_end(r + 1) {
            let Some(top) = t.get(r, c) else { continue };
            let Some(bottom) = t.get(r + 1, c) else { continue };
            if top != bottom {
                continue;
            }
            let target = top.letter() + 1;
            let right = (c + 1..t.row_end(r + 1)).any(|k| t.get(r + 1, k).unwrap().letter() == target);
            let left = (0..c).any(|l| t.get(r, l).is_some_and(|e| e.letter() == target));
            let zero_pair = top == Entry::barred(1)
                && t.get(r, c + 1) == Some(Entry::plain(0))
                && t.get(r + 1, c + 1) == Some(Entry::plain(0));
            if !(right || left || zero_pair) {
                return false;
            }
        }
    }
    true
}

fn weakly_increasing(t: &Tableau) -> bool {
    t.cells().all(|(r, c)| {
        let e = t.get(r, c).unwrap();
        t.get(r, c + 1).is_none_or(|east| e <= east)
            && t.get(r + 1, c).is_none_or(|south| e <= south)
    })
}

/// Whether `t` is a valid signed tableau for `w`: reduced bottom-to-top
/// reading word, weakly increasing rows and columns, licensed repeats.
pub fn is_signed_eg(t: &Tableau, w: &SignedPermutation) -> bool {
    let word = reading_word(t);
    word.len() == w.length()
        && SignedPermutation::evaluate(&word, w.n()).as_ref() == Ok(w)
        && weakly_increasing(t)
        && repeats_licensed(t)
}

fn fill_signs(
    shape: &Partition,
    word: &[u8],
    order: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<Entry>>,
    out: &mut BTreeSet<Tableau>,
) {
    if idx == order.len() {
        let t = Tableau::straight(grid.clone()).expect("rows follow a partition shape");
        if repeats_licensed(&t) {
            out.insert(t);
        }
        return;
    }
    let (r, c) = order[idx];
    let x = word[idx] as u32;
    let mut candidates = [Entry::plain(0); 2];
    let candidates = if x == 0 {
        &candidates[..1]
    } else {
        candidates = [Entry::barred(x), Entry::plain(x)];
        &candidates[..]
    };
    for &e in candidates {
        if c > 0 && grid[r][c - 1] > e {
            continue;
        }
        if r + 1 < shape.len() && (c as u32) < shape.part(r + 1) && e > grid[r + 1][c] {
            continue;
        }
        grid[r][c] = e;
        fill_signs(shape, word, order, idx + 1, grid, out);
    }
}

/// All tableaux over the alphabet ... < -2 < -1 < 0 < 1 < 2 < ... with
/// weakly increasing rows and columns whose bottom-to-top reading word,
/// bars stripped, is a reduced word for `w`, and whose vertical repeats
/// are each licensed.  Computed for every element; callers decide whether
/// the unknotted hypothesis of the surrounding conjectures holds.
pub fn enumerate_signed_eg(w: &SignedPermutation, cap: usize) -> Result<Vec<Tableau>> {
    let words = w.reduced_words(cap)?;
    let len = w.length();
    let mut out = BTreeSet::new();
    for shape in Partition::all_of_size(len as u32, len) {
        let mut order = Vec::with_capacity(len);
        for r in (0..shape.len()).rev() {
            for c in 0..shape.part(r) as usize {
                order.push((r, c));
            }
        }
        let mut grid: Vec<Vec<Entry>> = shape
            .parts()
            .iter()
            .map(|&p| vec![Entry::plain(0); p as usize])
            .collect();
        for word in &words {
            fill_signs(&shape, word.letters(), &order, 0, &mut grid, &mut out);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConjectureStatus {
    Equal,
    Counterexample,
    Skipped,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureStatus::Equal => write!(f, "EQUAL"),
            ConjectureStatus::Counterexample => write!(f, "COUNTEREXAMPLE"),
            ConjectureStatus::Skipped => write!(f, "SKIPPED"),
        }
    }
}

/// One Schur coefficient of a t-graded expansion: shape, power of t,
/// multiplicity.  Conjectures 1 and 2 live entirely in degree 0.
pub type GradedTerm = (Partition, u16, BigInt);

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub element: String,
    pub conjecture: u8,
    pub status: ConjectureStatus,
    pub reading: PatternReading,
    pub reason: Option<String>,
    pub lhs: Vec<GradedTerm>,
    pub rhs: Vec<GradedTerm>,
    pub diff: Vec<GradedTerm>,
}

fn graded_json(terms: &[GradedTerm]) -> Result<serde_json::Value> {
    let mut out = Vec::with_capacity(terms.len());
    for (shape, t, c) in terms {
        let c = c.to_i64().ok_or_else(|| {
            Error::Domain("coefficient does not fit in 64 bits for JSON output".into())
        })?;
        out.push(json!({ "shape": shape.parts(), "t": t, "c": c }));
    }
    Ok(serde_json::Value::Array(out))
}

impl ConjectureReport {
    pub fn to_json(&self) -> Result<serde_json::Value> {
        Ok(json!({
            "element": self.element,
            "conjecture": self.conjecture,
            "status": self.status.to_string(),
            "reading": self.reading.to_string(),
            "reason": self.reason,
            "lhs": graded_json(&self.lhs)?,
            "rhs": graded_json(&self.rhs)?,
            "diff": graded_json(&self.diff)?,
        }))
    }
}

fn sort_graded(terms: &mut [GradedTerm]) {
    terms.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
}

/// Evaluate one conjecture on one element: expand the appropriate
/// specialization of the two-alphabet series in Schur polynomials and
/// compare with the tableau counts, grading by barred entries where the
/// statement calls for it.  Works at max(k, length) variables so that the
/// expansion determines the underlying symmetric function.
pub fn test_conjecture(
    w: &SignedPermutation,
    which: u8,
    k: usize,
    reading: PatternReading,
    cap: usize,
) -> Result<ConjectureReport> {
    if !(1..=3).contains(&which) {
        return Err(Error::Domain(format!("no conjecture numbered {which}")));
    }
    let mut report = ConjectureReport {
        element: w.to_string(),
        conjecture: which,
        status: ConjectureStatus::Skipped,
        reading,
        reason: None,
        lhs: Vec::new(),
        rhs: Vec::new(),
        diff: Vec::new(),
    };
    if !is_unknotted(w, reading, cap)? {
        report.reason = Some("element is not unknotted".into());
        return Ok(report);
    }
    let words = w.reduced_words(cap)?;
    let max_zeros = words.iter().map(Word::zero_count).max().unwrap_or(0);
    if which == 2 && max_zeros > 1 {
        report.reason = Some(format!("a reduced word carries {max_zeros} zero letters"));
        return Ok(report);
    }
    if which == 3 && max_zeros > 0 {
        report.reason = Some("a reduced word carries a zero letter".into());
        return Ok(report);
    }

    let mut counts: BTreeMap<(Partition, u16), BigInt> = BTreeMap::new();
    for t in enumerate_signed_eg(w, cap)? {
        let shape = t.outer_shape();
        let bars = t.entries().filter(|e| e.is_barred()).count() as u16;
        let (grade, delta) = match which {
            1 => (0, BigInt::from(1)),
            2 => (0, BigInt::from(if bars % 2 == 0 { 1 } else { -1 })),
            _ => (bars, BigInt::from(1)),
        };
        *counts.entry((shape, grade)).or_default() += delta;
    }
    let mut rhs: Vec<GradedTerm> = counts
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((shape, t), c)| (shape, t, c))
        .collect();
    sort_graded(&mut rhs);

    // The sign and the t-grading both ride on the barred alphabet, so the
    // specializations negate or scale the first slot of the series.
    let kp = k.max(w.length());
    let d = double(w, kp, cap)?;
    let swapped = d.swap_xy();
    let expanded: Result<Vec<GradedTerm>> = match which {
        1 => expand_in_schur_x(&d.specialize_y_to_x()).map(|v| {
            v.into_iter().map(|(shape, c)| (shape, 0, c)).collect()
        }),
        2 => expand_in_schur_x(&swapped.specialize_y_to_neg_x()).map(|v| {
            v.into_iter().map(|(shape, c)| (shape, 0, c)).collect()
        }),
        _ => swapped
            .specialize_y_to_tx()
            .split_by_t()
            .into_iter()
            .map(|(t, slice)| {
                Ok(expand_in_schur_x(&slice)?
                    .into_iter()
                    .map(|(shape, c)| (shape, t, c))
                    .collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()
            .map(|slices| slices.into_iter().flatten().collect()),
    };
    let mut lhs = match expanded {
        Ok(v) => v,
        Err(Error::NotSymmetric { .. }) => {
            report.status = ConjectureStatus::Counterexample;
            report.reason = Some("specialized series is not symmetric".into());
            report.rhs = rhs;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    let mut delta: BTreeMap<(Partition, u16), BigInt> = BTreeMap::new();
    for (shape, t, c) in &lhs {
        *delta.entry((shape.clone(), *t)).or_default() += c;
    }
    for (shape, t, c) in &rhs {
        *delta.entry((shape.clone(), *t)).or_default() -= c;
    }
    let mut diff: Vec<GradedTerm> = delta
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((shape, t), c)| (shape, t, c))
        .collect();

    report.status = if diff.is_empty() {
        ConjectureStatus::Equal
    } else {
        ConjectureStatus::Counterexample
    };
    sort_graded(&mut lhs);
    sort_graded(&mut rhs);
    sort_graded(&mut diff);
    report.lhs = lhs;
    report.rhs = rhs;
    report.diff = diff;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::all_elements;
    use crate::stanley::DEFAULT_LENGTH_CAP;
    use crate::symfunc::expand_in_schur_p;

    const CAP: usize = DEFAULT_LENGTH_CAP;

    fn element(letters: &[u8], n: usize) -> SignedPermutation {
        let w = SignedPermutation::evaluate(&Word(letters.to_vec()), n).unwrap();
        assert_eq!(w.length(), letters.len(), "{letters:?} must be reduced");
        w
    }

    fn window(w: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(w.to_vec()).unwrap()
    }

    fn tableaux(specs: &[&str]) -> Vec<Tableau> {
        let mut v: Vec<Tableau> = specs.iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        v
    }

    fn terms(spec: &[(&[u32], u16, i64)]) -> Vec<GradedTerm> {
        let mut v: Vec<GradedTerm> = spec
            .iter()
            .map(|(parts, t, c)| (Partition::new(*parts).unwrap(), *t, BigInt::from(*c)))
            .collect();
        sort_graded(&mut v);
        v
    }

    #[test]
    fn pattern_readings_differ_on_scattered_occurrences() {
        let factor = PatternReading::Factor;
        let scattered = PatternReading::Subsequence;
        assert!(factor.occurs(&[3, 1, 2, 1, 0], &[1, 2, 1]));
        assert!(!factor.occurs(&[1, 3, 2, 1], &[1, 2, 1]));
        assert!(scattered.occurs(&[1, 3, 2, 1], &[1, 2, 1]));
        assert!(!scattered.occurs(&[2, 1, 1], &[1, 2, 1]));
        assert!(!factor.occurs(&[1, 2], &[1, 2, 1]));
    }

    #[test]
    fn sample_elements_classify_as_unknotted() {
        let samples: [(&[u8], usize); 4] = [
            (&[1, 2, 3, 4, 5, 4], 6),
            (&[2, 1, 0, 1, 2, 3, 2], 4),
            (&[1, 0, 1, 0, 3, 4, 3], 5),
            (&[2, 1, 3, 2, 4, 3], 5),
        ];
        for (letters, n) in samples {
            let w = element(letters, n);
            assert!(
                is_unknotted(&w, PatternReading::Factor, CAP).unwrap(),
                "{letters:?}"
            );
        }
        let id = SignedPermutation::identity(3);
        assert!(is_unknotted(&id, PatternReading::Factor, CAP).unwrap());
        assert!(is_unknotted(&id, PatternReading::Subsequence, CAP).unwrap());
        assert!(is_untangled(&id, CAP).unwrap());
    }

    #[test]
    fn braid_pattern_followed_by_the_next_generator_is_knotted() {
        let w = element(&[0, 1, 0, 1, 2], 3);
        assert_eq!(w.window(), &[-1, 3, -2]);
        assert!(!is_unknotted(&w, PatternReading::Factor, CAP).unwrap());
        assert!(!is_unknotted(&w, PatternReading::Subsequence, CAP).unwrap());
    }

    #[test]
    fn untangled_implies_unknotted_on_rank_three() {
        let mut untangled = 0;
        for w in all_elements(3, true, 6) {
            if is_untangled(&w, CAP).unwrap() {
                untangled += 1;
                assert!(is_unknotted(&w, PatternReading::Factor, CAP).unwrap(), "{w}");
                assert!(
                    is_unknotted(&w, PatternReading::Subsequence, CAP).unwrap(),
                    "{w}"
                );
            }
        }
        assert!(untangled > 1);
        assert!(!is_untangled(&element(&[2], 3), CAP).unwrap());
    }

    #[test]
    fn classification_table_is_stable() {
        let mut rows = all_elements(3, true, 6);
        rows.sort_by_key(|w| (w.length(), w.window().to_vec()));
        let mut table = String::new();
        for w in rows {
            table.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                w,
                w.length(),
                is_unknotted(&w, PatternReading::Factor, CAP).unwrap(),
                is_unknotted(&w, PatternReading::Subsequence, CAP).unwrap(),
                is_untangled(&w, CAP).unwrap(),
            ));
        }
        assert_eq!(table, include_str!("../tests/data/classification_c3.tsv"));
    }

    #[test]
    fn scattered_occurrences_can_knot_an_element_factors_miss() {
        // one reduced word is (0,1,0,2,1): the pattern 0,1,0,1 appears
        // scattered but never as a run, and the word carries a 2
        let w = window(&[3, -2, -1]);
        assert!(is_unknotted(&w, PatternReading::Factor, CAP).unwrap());
        assert!(!is_unknotted(&w, PatternReading::Subsequence, CAP).unwrap());
        let words = w.reduced_words(CAP).unwrap();
        assert!(words.contains(&Word(vec![0, 1, 0, 2, 1])));
    }

    #[test]
    fn subsequence_classification_is_at_least_as_strict() {
        for w in all_elements(3, true, 6) {
            if is_unknotted(&w, PatternReading::Subsequence, CAP).unwrap() {
                assert!(is_unknotted(&w, PatternReading::Factor, CAP).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn zero_letter_count_is_constant_and_scales_the_diagonal() {
        assert_eq!(ze(&element(&[1, 2, 1], 3), CAP).unwrap(), 0);
        assert_eq!(ze(&element(&[0], 1), CAP).unwrap(), 1);
        assert_eq!(ze(&element(&[0, 1, 0], 2), CAP).unwrap(), 2);
        assert!(verify_2ze_relation(&element(&[0], 1), 2, CAP).unwrap());
        for w in all_elements(2, true, 6) {
            assert_eq!(ze(&w, CAP).unwrap(), w.zero_count(), "{w}");
            assert!(verify_2ze_relation(&w, 2, CAP).unwrap(), "{w}");
        }
    }

    #[test]
    fn worked_tableau_passes_every_repeat_license() {
        let w = window(&[-1, -2, 5, 4, 3, 8, 7, 6]);
        let t: Tableau = "-7 -1 0 6 / -3 -1 0 6 / -3 4".parse().unwrap();
        assert_eq!(
            reading_word(&t),
            Word(vec![3, 4, 3, 1, 0, 6, 7, 1, 0, 6])
        );
        assert!(is_signed_eg(&t, &w));
        // breaking the 0-pair next to the barred 1s voids the license
        let mut broken = t.clone();
        broken.set(0, 2, Entry::plain(1));
        assert!(!is_signed_eg(&broken, &w));
        // unbarring the 4 removes the larger neighbor of the barred 3s
        let mut broken = t.clone();
        broken.set(2, 1, Entry::plain(5));
        assert!(!is_signed_eg(&broken, &w));
    }

    #[test]
    fn sixteen_tableaux_for_a_fully_signed_element() {
        let w = window(&[-1, -2, 4, 3]);
        let expected = tableaux(&[
            "-3 -1 0 1 / 0",
            "-1 0 1 3 / 0",
            "-3 -1 0 / -1 0",
            "-1 0 3 / -1 0",
            "-3 0 1 / 0 1",
            "-1 0 1 / 0 3",
            "-3 0 1 / -1 / 0",
            "-1 0 1 / 0 / 3",
            "-3 -1 0 / 0 / 1",
            "-1 0 3 / 0 / 1",
            "-3 0 / 0 1 / 1",
            "-1 0 / -1 0 / 3",
            "-1 0 / 0 3 / 1",
            "-3 -1 / -1 0 / 0",
            "-3 0 / -1 / 0 / 1",
            "-1 0 / 0 / 1 / 3",
        ]);
        assert_eq!(enumerate_signed_eg(&w, CAP).unwrap(), expected);
    }

    #[test]
    fn ten_tableaux_for_a_singly_signed_element() {
        let w = window(&[3, 2, -1, 4]);
        let expected = tableaux(&[
            "-2 0 1 2",
            "0 1 2 / 2",
            "-2 1 2 / 0",
            "-2 -1 2 / 0",
            "-2 -1 / 0 1",
            "-2 1 / 0 1",
            "-2 1 / -1 / 0",
            "-2 -1 / -1 / 0",
            "-1 2 / 0 / 2",
            "-2 / -1 / 0 / 2",
        ]);
        assert_eq!(enumerate_signed_eg(&w, CAP).unwrap(), expected);
    }

    #[test]
    fn ten_tableaux_for_an_unsigned_element() {
        let w = window(&[3, 2, 1, 4]);
        let expected = tableaux(&[
            "-2 1 2",
            "-2 -1 2",
            "1 2 / 2",
            "-1 2 / 2",
            "-2 1 / 1",
            "-2 -1 / 1",
            "-2 1 / -1",
            "-2 -1 / -1",
            "-2 / 1 / 2",
            "-2 / -1 / 2",
        ]);
        assert_eq!(enumerate_signed_eg(&w, CAP).unwrap(), expected);
        let id = SignedPermutation::identity(2);
        assert_eq!(enumerate_signed_eg(&id, CAP).unwrap(), vec![Tableau::empty()]);
    }

    #[test]
    fn first_conjecture_matches_on_the_three_examples() {
        let cases: [(&[i32], &[(&[u32], u16, i64)]); 3] = [
            (
                &[-1, -2, 4, 3],
                &[
                    (&[4, 1], 0, 2),
                    (&[3, 2], 0, 4),
                    (&[3, 1, 1], 0, 4),
                    (&[2, 2, 1], 0, 4),
                    (&[2, 1, 1, 1], 0, 2),
                ],
            ),
            (
                &[3, 2, -1, 4],
                &[
                    (&[4], 0, 1),
                    (&[3, 1], 0, 3),
                    (&[2, 2], 0, 2),
                    (&[2, 1, 1], 0, 3),
                    (&[1, 1, 1, 1], 0, 1),
                ],
            ),
            (
                &[3, 2, 1, 4],
                &[(&[3], 0, 2), (&[2, 1], 0, 6), (&[1, 1, 1], 0, 2)],
            ),
        ];
        for (win, expected) in cases {
            let report =
                test_conjecture(&window(win), 1, 1, PatternReading::Factor, CAP).unwrap();
            assert_eq!(report.status, ConjectureStatus::Equal, "{win:?}");
            assert_eq!(report.lhs, terms(expected), "{win:?}");
            assert_eq!(report.rhs, terms(expected), "{win:?}");
            assert!(report.diff.is_empty());
        }
    }

    #[test]
    fn second_conjecture_signs_by_bar_parity() {
        let report = test_conjecture(
            &window(&[3, 2, -1, 4]),
            2,
            1,
            PatternReading::Factor,
            CAP,
        )
        .unwrap();
        assert_eq!(report.status, ConjectureStatus::Equal);
        let expected = terms(&[
            (&[4], 0, -1),
            (&[3, 1], 0, 1),
            (&[2, 1, 1], 0, -1),
            (&[1, 1, 1, 1], 0, 1),
        ]);
        assert_eq!(report.lhs, expected);
        assert_eq!(report.rhs, expected);

        let report = test_conjecture(&window(&[3, 2, 1, 4]), 2, 1, PatternReading::Factor, CAP)
            .unwrap();
        assert_eq!(report.status, ConjectureStatus::Equal);
        assert!(report.lhs.is_empty());
        assert!(report.rhs.is_empty());
    }

    #[test]
    fn third_conjecture_grades_by_bar_count() {
        let report = test_conjecture(&window(&[3, 2, 1, 4]), 3, 1, PatternReading::Factor, CAP)
            .unwrap();
        assert_eq!(report.status, ConjectureStatus::Equal);
        let expected = terms(&[
            (&[2, 1], 0, 1),
            (&[3], 1, 1),
            (&[2, 1], 1, 2),
            (&[1, 1, 1], 1, 1),
            (&[3], 2, 1),
            (&[2, 1], 2, 2),
            (&[1, 1, 1], 2, 1),
            (&[2, 1], 3, 1),
        ]);
        assert_eq!(report.lhs, expected);
        assert_eq!(report.rhs, expected);
    }

    #[test]
    fn hypothesis_violations_skip_instead_of_failing() {
        let report = test_conjecture(
            &window(&[-1, -2, 4, 3]),
            2,
            1,
            PatternReading::Factor,
            CAP,
        )
        .unwrap();
        assert_eq!(report.status, ConjectureStatus::Skipped);
        assert!(report.reason.as_deref().unwrap().contains("zero letters"));

        let report = test_conjecture(
            &window(&[3, 2, -1, 4]),
            3,
            1,
            PatternReading::Factor,
            CAP,
        )
        .unwrap();
        assert_eq!(report.status, ConjectureStatus::Skipped);

        let knotted = element(&[0, 1, 0, 1, 2], 3);
        let report = test_conjecture(&knotted, 1, 1, PatternReading::Factor, CAP).unwrap();
        assert_eq!(report.status, ConjectureStatus::Skipped);
        assert_eq!(report.reason.as_deref(), Some("element is not unknotted"));
    }

    #[test]
    fn third_conjecture_collapses_to_the_first_at_t_one() {
        for w in all_elements(3, false, 6) {
            let one = test_conjecture(&w, 1, 3, PatternReading::Factor, CAP).unwrap();
            let three = test_conjecture(&w, 3, 3, PatternReading::Factor, CAP).unwrap();
            assert_eq!(one.status, three.status, "{w}");
            let mut collapsed: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (shape, _, c) in &three.rhs {
                *collapsed.entry(shape.clone()).or_default() += c;
            }
            let folded: Vec<GradedTerm> = collapsed
                .into_iter()
                .map(|(shape, c)| (shape, 0, c))
                .collect();
            assert_eq!(one.rhs, folded, "{w}");
        }
    }

    #[test]
    fn diagonal_series_expands_positively_in_the_p_basis() {
        for w in all_elements(4, false, CAP) {
            let k = w.length().max(1);
            let diag = double(&w, k, CAP).unwrap().specialize_y_to_x();
            for (shape, c) in expand_in_schur_p(&diag).unwrap() {
                assert!(c >= BigInt::ZERO, "{w}: coefficient of P_{shape} is {c}");
            }
        }
    }

    #[test]
    fn reports_serialize_with_explicit_grading() {
        let report = test_conjecture(&window(&[3, 2, 1, 4]), 3, 1, PatternReading::Factor, CAP)
            .unwrap();
        let v = report.to_json().unwrap();
        assert_eq!(v["status"], "EQUAL");
        assert_eq!(v["reading"], "factor");
        assert_eq!(v["conjecture"], 3);
        assert!(v["reason"].is_null());
        assert_eq!(v["lhs"][0]["shape"], json!([2, 1]));
        assert_eq!(v["lhs"][0]["t"], 0);
        assert_eq!(v["lhs"][0]["c"], 1);
        assert_eq!(v["diff"], json!([]));
    }
}
