//! Tableaux over the primed alphabet `k' < ... < 1' < 0 < 1' < 1 < 2' < 2 < ...`.
//!
//! A cell holds a letter together with an optional mark: a *bar* (rendered
//! `-3`), a *prime* (rendered `3'`), or no mark (rendered `3`).  The unmarked
//! letter `0` is also allowed; it is used by the signed reduced-word tableaux
//! and never carries a mark.  Entries are encoded so that the derived integer
//! order agrees with the alphabet order
//! `-k < ... < -1 < 0 < 1' < 1 < 2' < 2 < ... < k' < k`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::Monomial;

/// One tableau cell: a letter with an optional prime or bar.
///
/// Encoding of the inner key: barred `i` is `-i`, the letter `0` is `0`,
/// primed `i` is `2i - 1`, and plain `i` is `2i`.  The derived `Ord` is the
/// alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Entry(i32);

impl Entry {
    pub fn plain(i: u32) -> Entry {
        Entry(2 * i as i32)
    }

    pub fn primed(i: u32) -> Entry {
        assert!(i >= 1, "letter 0 cannot be primed");
        Entry(2 * i as i32 - 1)
    }

    pub fn barred(i: u32) -> Entry {
        assert!(i >= 1, "letter 0 cannot be barred");
        Entry(-(i as i32))
    }

    pub fn key(self) -> i32 {
        self.0
    }

    pub fn from_key(key: i32) -> Entry {
        Entry(key)
    }

    /// The underlying letter, with any mark stripped.
    pub fn letter(self) -> u32 {
        if self.0 < 0 {
            (-self.0) as u32
        } else {
            (self.0 as u32 + 1) / 2
        }
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn is_primed(self) -> bool {
        self.0 > 0 && self.0 % 2 == 1
    }

    /// Unmarked, including the letter `0`.
    pub fn is_plain(self) -> bool {
        self.0 >= 0 && self.0 % 2 == 0
    }

    pub fn is_marked(self) -> bool {
        !self.is_plain()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Increase by half a unit: plain `i` becomes primed `i + 1`, primed `i`
    /// becomes plain `i`.  Barred entries and the letter `0` have no
    /// half-unit successor.
    pub fn up(self) -> Result<Entry> {
        if self.0 <= 0 {
            return Err(Error::Alphabet(format!(
                "{self} has no half-unit successor"
            )));
        }
        Ok(Entry(self.0 + 1))
    }

    /// Decrease by half a unit.  Fails on `1'`, on barred entries, and on `0`.
    pub fn down(self) -> Result<Entry> {
        if self.0 <= 1 {
            return Err(Error::Alphabet(format!(
                "{self} has no half-unit predecessor"
            )));
        }
        Ok(Entry(self.0 - 1))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "-{}", self.letter())
        } else if self.is_primed() {
            write!(f, "{}'", self.letter())
        } else {
            write!(f, "{}", self.letter())
        }
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Entry> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (body, barred) = match body.strip_prefix('-') {
            Some(b) => (b, true),
            None => (body, false),
        };
        if primed && barred {
            return Err(Error::Parse(format!("entry {s:?} is both barred and primed")));
        }
        let letter: u32 = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad tableau entry {s:?}")))?;
        if letter == 0 && (primed || barred) {
            return Err(Error::Parse("letter 0 cannot carry a mark".into()));
        }
        Ok(if barred {
            Entry::barred(letter)
        } else if primed {
            Entry::primed(letter)
        } else {
            Entry::plain(letter)
        })
    }
}

/// A (possibly skew) tableau.  Row `r` holds its filled cells only; the
/// number of removed leading cells is `inner[r]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<Entry>>,
}

impl Tableau {
    /// Build a skew tableau and validate that the outer and inner boundaries
    /// form partitions with the inner contained in the outer.
    pub fn new(inner: &Partition, rows: Vec<Vec<Entry>>) -> Result<Tableau> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) && inner.part(rows.len() - 1) == 0 {
            rows.pop();
        }
        if inner.len() > rows.len() {
            return Err(Error::BadTableau(
                "inner shape extends below the outer shape".into(),
            ));
        }
        let inner: Vec<usize> = (0..rows.len()).map(|r| inner.part(r) as usize).collect();
        let t = Tableau { inner, rows };
        t.check_shape()?;
        Ok(t)
    }

    pub fn straight(rows: Vec<Vec<Entry>>) -> Result<Tableau> {
        Tableau::new(&Partition::empty(), rows)
    }

    pub fn empty() -> Tableau {
        Tableau {
            inner: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        for r in 0..self.rows.len() {
            let end = self.row_end(r);
            if r + 1 < self.rows.len() {
                if self.row_end(r + 1) > end {
                    return Err(Error::BadTableau("outer shape is not a partition".into()));
                }
                if self.inner[r + 1] > self.inner[r] {
                    return Err(Error::BadTableau("inner shape is not a partition".into()));
                }
            }
        }
        Ok(())
    }

    /// First filled column of row `r`.
    pub fn row_start(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    /// One past the last filled column of row `r`.
    pub fn row_end(&self, r: usize) -> usize {
        self.row_start(r) + self.rows.get(r).map_or(0, |row| row.len())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_skew(&self) -> bool {
        self.inner.iter().any(|&c| c > 0)
    }

    pub fn outer_shape(&self) -> Partition {
        let parts: Vec<u32> = (0..self.rows.len()).map(|r| self.row_end(r) as u32).collect();
        Partition::new(parts).expect("outer boundary is a partition")
    }

    pub fn inner_shape(&self) -> Partition {
        let parts: Vec<u32> = self.inner.iter().map(|&c| c as u32).collect();
        Partition::new(parts).expect("inner boundary is a partition")
    }

    pub fn shape(&self) -> (Partition, Partition) {
        (self.outer_shape(), self.inner_shape())
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r < self.rows.len() && c >= self.row_start(r) && c < self.row_end(r)
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Entry> {
        if self.contains_cell(r, c) {
            Some(self.rows[r][c - self.inner[r]])
        } else {
            None
        }
    }

    /// Overwrite a filled cell.  Panics if the cell is not in the diagram.
    pub fn set(&mut self, r: usize, c: usize, e: Entry) {
        assert!(self.contains_cell(r, c), "cell ({r},{c}) not in tableau");
        let start = self.inner[r];
        self.rows[r][c - start] = e;
    }

    /// Filled cells in row-major order, top row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows.len()).flat_map(move |r| (self.row_start(r)..self.row_end(r)).map(move |c| (r, c)))
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn row(&self, r: usize) -> &[Entry] {
        &self.rows[r]
    }

    /// Add a cell at an addable position: the right end of a row, one step
    /// left of a row's first cell, or the start of a new bottom row.  Both
    /// boundaries must remain partitions.  On error the tableau is left
    /// unchanged.
    pub fn add_cell(&mut self, r: usize, c: usize, e: Entry) -> Result<()> {
        if self.contains_cell(r, c) {
            return Err(Error::BadTableau(format!("cell ({r},{c}) already filled")));
        }
        let not_addable = || Error::BadTableau(format!("cell ({r},{c}) is not addable"));
        if r == self.rows.len() {
            if r > 0 && (c > self.inner[r - 1] || c >= self.row_end(r - 1)) {
                return Err(not_addable());
            }
            self.inner.push(c);
            self.rows.push(vec![e]);
        } else if r < self.rows.len() && c == self.row_end(r) {
            if r > 0 && c >= self.row_end(r - 1) {
                return Err(not_addable());
            }
            self.rows[r].push(e);
        } else if r < self.rows.len() && c + 1 == self.row_start(r) {
            if r + 1 < self.rows.len() && c < self.row_start(r + 1) {
                return Err(not_addable());
            }
            self.inner[r] -= 1;
            self.rows[r].insert(0, e);
        } else {
            return Err(not_addable());
        }
        Ok(())
    }

    /// Remove the entry at an inner corner: the first cell of its row with
    /// no cell directly above.  The inner boundary grows by that cell.
    pub fn remove_inner_corner(&mut self, r: usize, c: usize) -> Result<Entry> {
        if !self.contains_cell(r, c) {
            return Err(Error::BadTableau(format!("cell ({r},{c}) not in tableau")));
        }
        if c != self.row_start(r) || (r > 0 && self.row_start(r - 1) <= c) {
            return Err(Error::BadTableau(format!(
                "cell ({r},{c}) is not an inner corner"
            )));
        }
        self.inner[r] += 1;
        Ok(self.rows[r].remove(0))
    }

    /// Transpose along the main diagonal; rows become columns.
    pub fn transpose(&self) -> Tableau {
        if self.rows.is_empty() {
            return Tableau::empty();
        }
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for c in 0..self.row_end(0) {
            let col: Vec<Entry> = (0..self.rows.len())
                .filter_map(|r| self.get(r, c))
                .collect();
            // conjugate inner boundary: rows whose first cell lies past column c
            inner.push((0..self.rows.len()).filter(|&r| self.row_start(r) > c).count());
            rows.push(col);
        }
        while rows.last().is_some_and(|r| r.is_empty()) && inner.last() == Some(&0) {
            rows.pop();
            inner.pop();
        }
        Tableau { inner, rows }
    }

    /// Add half a unit to every entry and transpose.  Fails if the tableau
    /// contains a barred entry or the letter `0`.
    pub fn plus_transform(&self) -> Result<Tableau> {
        let mut t = self.transpose();
        for row in &mut t.rows {
            for e in row {
                *e = e.up()?;
            }
        }
        Ok(t)
    }

    /// Inverse of [`plus_transform`]: transpose and subtract half a unit.
    pub fn minus_transform(&self) -> Result<Tableau> {
        let mut t = self.transpose();
        for row in &mut t.rows {
            for e in row {
                *e = e.down()?;
            }
        }
        Ok(t)
    }

    /// Filled cells read row by row, left to right, bottom row first.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_cells());
        for r in (0..self.rows.len()).rev() {
            for c in self.row_start(r)..self.row_end(r) {
                out.push((r, c));
            }
        }
        out
    }

    /// Letters of the unmarked entries, in reading order (bottom row to top,
    /// each row left to right).
    pub fn reading_word_plain(&self) -> Vec<u32> {
        self.reading_cells()
            .into_iter()
            .filter_map(|(r, c)| {
                let e = self.get(r, c).unwrap();
                e.is_plain().then(|| e.letter())
            })
            .collect()
    }

    /// Letters of all entries with marks stripped, in reading order.
    pub fn reading_word_letters(&self) -> Vec<u32> {
        self.reading_cells()
            .into_iter()
            .map(|(r, c)| self.get(r, c).unwrap().letter())
            .collect()
    }

    /// Standard: unmarked letters `1..=n` each appearing once, with rows and
    /// columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let n = self.num_cells();
        let mut seen = vec![false; n + 1];
        for e in self.entries() {
            let l = e.letter() as usize;
            if !e.is_plain() || l == 0 || l > n || seen[l] {
                return false;
            }
            seen[l] = true;
        }
        for (r, c) in self.cells() {
            let e = self.get(r, c).unwrap();
            if let Some(w) = self.get(r, c.wrapping_sub(1)) {
                if w >= e {
                    return false;
                }
            }
            if r > 0 {
                if let Some(nb) = self.get(r - 1, c) {
                    if nb >= e {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Check membership in the family of primed tableaux at marking level
    /// `j`: letters at most `k`; letters `<= j` appear plain or primed,
    /// letters `> j` appear plain or barred; rows and columns weakly
    /// increase; each row holds at most one marked copy of a letter and each
    /// column at most one plain copy.
    pub fn validate_marked(&self, j: u32, k: u32) -> Result<()> {
        for (r, c) in self.cells() {
            let e = self.get(r, c).unwrap();
            let l = e.letter();
            if l == 0 || l > k {
                return Err(Error::BadTableau(format!(
                    "entry {e} at ({r},{c}) outside alphabet with k = {k}"
                )));
            }
            if l <= j && e.is_barred() {
                return Err(Error::BadTableau(format!(
                    "entry {e} at ({r},{c}) is barred but letters <= {j} carry primes"
                )));
            }
            if l > j && e.is_primed() {
                return Err(Error::BadTableau(format!(
                    "entry {e} at ({r},{c}) is primed but letters > {j} carry bars"
                )));
            }
            if c > 0 {
                if let Some(w) = self.get(r, c - 1) {
                    if w > e {
                        return Err(Error::BadTableau(format!(
                            "row {r} decreases at column {c}"
                        )));
                    }
                    if w == e && e.is_marked() {
                        return Err(Error::BadTableau(format!(
                            "row {r} repeats the marked entry {e}"
                        )));
                    }
                }
            }
            if r > 0 {
                if let Some(nb) = self.get(r - 1, c) {
                    if nb > e {
                        return Err(Error::BadTableau(format!(
                            "column {c} decreases at row {r}"
                        )));
                    }
                    if nb == e && e.is_plain() {
                        return Err(Error::BadTableau(format!(
                            "column {c} repeats the plain entry {e}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_marked_valid(&self, j: u32, k: u32) -> bool {
        self.validate_marked(j, k).is_ok()
    }

    /// Marked-letter multiplicities: position `i - 1` counts primed copies of
    /// `i` when `i <= j` and barred copies when `i > j`.
    pub fn weight_marked(&self, k: u32) -> Vec<u32> {
        let mut x = vec![0; k as usize];
        for e in self.entries() {
            if e.is_marked() {
                x[e.letter() as usize - 1] += 1;
            }
        }
        x
    }

    /// Plain-letter multiplicities over `1..=k`.
    pub fn weight_plain(&self, k: u32) -> Vec<u32> {
        let mut y = vec![0; k as usize];
        for e in self.entries() {
            if e.is_plain() && !e.is_zero() {
                y[e.letter() as usize - 1] += 1;
            }
        }
        y
    }

    /// Monomial `x^X y^Y` with `X` the marked and `Y` the plain weight.
    pub fn double_weight(&self, k: u32) -> Monomial {
        Monomial::new(
            self.weight_marked(k)
                .into_iter()
                .map(|m| m as u16)
                .collect(),
            self.weight_plain(k).into_iter().map(|m| m as u16).collect(),
            0,
        )
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in 0..self.rows.len() {
            if !first {
                write!(f, " / ")?;
            }
            first = false;
            let mut cells: Vec<String> = vec![".".into(); self.inner[r]];
            cells.extend(self.rows[r].iter().map(|e| e.to_string()));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tableau> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row_text in s.split('/') {
            let mut skipped = 0usize;
            let mut row = Vec::new();
            for tok in row_text.split_whitespace() {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse(
                            "inner cells must precede the filled cells of a row".into(),
                        ));
                    }
                    skipped += 1;
                } else {
                    row.push(tok.parse()?);
                }
            }
            inner.push(skipped as u32);
            rows.push(row);
        }
        while rows.last().is_some_and(|r| r.is_empty()) && inner.last() == Some(&0) {
            rows.pop();
            inner.pop();
        }
        Tableau::new(&Partition::new(inner)?, rows)
    }
}

/// All tableaux of the given skew shape passing [`Tableau::validate_marked`]
/// at marking level `j` with letters at most `k`.
pub fn enumerate_marked(
    outer: &Partition,
    inner: &Partition,
    k: u32,
    j: u32,
) -> Result<Vec<Tableau>> {
    if !outer.contains(inner) {
        return Err(Error::ShapeMismatch);
    }
    let mut alphabet: Vec<Entry> = Vec::new();
    for i in 1..=k {
        if i <= j {
            alphabet.push(Entry::primed(i));
        } else {
            alphabet.push(Entry::barred(i));
        }
        alphabet.push(Entry::plain(i));
    }
    alphabet.sort();
    let rows: Vec<Vec<Entry>> = (0..outer.len())
        .map(|r| vec![Entry::plain(1); (outer.part(r) - inner.part(r)) as usize])
        .collect();
    let mut t = Tableau::new(inner, rows)?;
    let cells: Vec<(usize, usize)> = t.cells().collect();
    let mut out = Vec::new();
    fill_marked(&mut t, &cells, 0, &alphabet, &mut out);
    Ok(out)
}

fn fill_marked(
    t: &mut Tableau,
    cells: &[(usize, usize)],
    idx: usize,
    alphabet: &[Entry],
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(t.clone());
        return;
    }
    let (r, c) = cells[idx];
    let left = if c > 0 { t.get(r, c - 1) } else { None };
    let above = if r > 0 { t.get(r - 1, c) } else { None };
    for &e in alphabet {
        if let Some(w) = left {
            if w > e || (w == e && e.is_marked()) {
                continue;
            }
        }
        if let Some(a) = above {
            if a > e || (a == e && e.is_plain()) {
                continue;
            }
        }
        t.set(r, c, e);
        fill_marked(t, cells, idx + 1, alphabet, out);
    }
}

/// Primed tableaux: every letter may be primed (marking level `k`).
pub fn enumerate_primed(outer: &Partition, inner: &Partition, k: u32) -> Result<Vec<Tableau>> {
    enumerate_marked(outer, inner, k, k)
}

/// Signed tableaux: every letter may be barred (marking level `0`).
pub fn enumerate_signed(outer: &Partition, inner: &Partition, k: u32) -> Result<Vec<Tableau>> {
    enumerate_marked(outer, inner, k, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn entry_order_matches_alphabet() {
        let order = ["-4", "-3", "-1", "0", "1'", "1", "2'", "2", "3'", "3"];
        let entries: Vec<Entry> = order.iter().map(|s| s.parse().unwrap()).collect();
        for w in entries.windows(2) {
            assert!(w[0] < w[1]);
        }
        for s in order {
            let e: Entry = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn entry_half_units() {
        let one_primed = Entry::primed(1);
        let one = Entry::plain(1);
        assert_eq!(one_primed.up().unwrap(), one);
        assert_eq!(one.up().unwrap(), Entry::primed(2));
        assert_eq!(one.down().unwrap(), one_primed);
        assert!(one_primed.down().is_err());
        assert!(Entry::plain(0).up().is_err());
        assert!(Entry::barred(3).up().is_err());
        assert_eq!(one_primed.letter(), 1);
        assert_eq!(Entry::barred(4).letter(), 4);
        assert!(Entry::plain(0).is_plain() && !Entry::plain(0).is_marked());
    }

    #[test]
    fn display_parse_round_trip() {
        for s in [
            "-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2",
            ". 2 2 / 2 3' 3 / 3'",
            "1' 2' / 1",
            "0 1 2 / 2",
            "",
        ] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("2 / 1 1".parse::<Tableau>().is_err());
        assert!("1 . 2".parse::<Tableau>().is_err());
        assert!(". 1 / . . 2".parse::<Tableau>().is_err());
    }

    #[test]
    fn marked_validation_accepts_mixed_example() {
        let ex = t("-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2");
        ex.validate_marked(2, 4).unwrap();
        assert_eq!(ex.weight_marked(4), vec![1, 2, 2, 2]);
        assert_eq!(ex.weight_plain(4), vec![2, 2, 0, 1]);
        assert!(ex.validate_marked(4, 4).is_err());
        assert!(ex.validate_marked(0, 4).is_err());
        assert!(ex.validate_marked(2, 3).is_err());
    }

    #[test]
    fn marked_validation_multiplicity_rules() {
        assert!(t("2 / 2").validate_marked(2, 2).is_err());
        assert!(t("2' 2'").validate_marked(2, 2).is_err());
        assert!(t("-2 -2").validate_marked(0, 2).is_err());
        assert!(t("2 1").validate_marked(2, 2).is_err());
        assert!(t("2 / 1").validate_marked(2, 2).is_err());
        t("2' / 2'").validate_marked(2, 2).unwrap();
        t("2' 2").validate_marked(2, 2).unwrap();
        t("-2 / -2").validate_marked(0, 2).unwrap();
    }

    #[test]
    fn enumeration_matches_filter() {
        let outer = Partition::new(vec![2, 2]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        for j in 0u32..=2 {
            let fast = enumerate_marked(&outer, &inner, 2, j).unwrap();
            let mut slow = 0;
            let keys: Vec<i32> = (-2..=4).collect();
            for a in &keys {
                for b in &keys {
                    for c in &keys {
                        let cand = Tableau::new(
                            &inner,
                            vec![
                                vec![Entry::from_key(*a)],
                                vec![Entry::from_key(*b), Entry::from_key(*c)],
                            ],
                        )
                        .unwrap();
                        if cand.is_marked_valid(j, 2) {
                            slow += 1;
                        }
                    }
                }
            }
            assert_eq!(fast.len(), slow);
            for cand in &fast {
                cand.validate_marked(j, 2).unwrap();
            }
        }
    }

    #[test]
    fn level_sets_are_equinumerous() {
        let outer = Partition::new(vec![3, 1]).unwrap();
        let inner = Partition::empty();
        let counts: Vec<usize> = (0u32..=3)
            .map(|j| enumerate_marked(&outer, &inner, 3, j).unwrap().len())
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn plus_transform_round_trip() {
        let s = t("1 2' / 2");
        let plus = s.plus_transform().unwrap();
        assert_eq!(plus, t("2' 3' / 2"));
        assert_eq!(plus.minus_transform().unwrap(), s);

        let u = t("1' 1 / 1'");
        assert_eq!(u.plus_transform().unwrap(), t("1 1 / 2'"));
        assert!(t("-3 1").plus_transform().is_err());
        assert!(t("1' 1").minus_transform().is_err());
    }

    #[test]
    fn transpose_of_skew_shape() {
        let s = t(". 2 2 / 2 3' 3 / 3'");
        let tr = s.transpose();
        assert_eq!(tr.to_string(), ". 2 3' / 2 3' / 2 3");
        assert_eq!(tr.transpose(), s);
        assert_eq!(s.outer_shape().conjugate(), tr.outer_shape());
        assert_eq!(s.inner_shape().conjugate(), tr.inner_shape());

        // disconnected columns keep their separation
        let d = t(". . . 1 / 2");
        let dt = d.transpose();
        assert_eq!(dt.to_string(), ". 2 / . / . / 1");
        assert_eq!(dt.transpose(), d);
    }

    #[test]
    fn reading_words() {
        let ex = t("-4 -3 1 4 / -4 1' 2' / -3 1 2' / 2 2");
        assert_eq!(ex.reading_word_plain(), vec![2, 2, 1, 1, 4]);
        assert_eq!(
            ex.reading_word_letters(),
            vec![2, 2, 3, 1, 2, 4, 1, 2, 4, 3, 1, 4]
        );
    }

    #[test]
    fn standard_tableaux() {
        assert!(t("1 2 / 3").is_standard());
        assert!(!t("1 3' / 2").is_standard());
        assert!(!t("1 1 / 2").is_standard());
        assert!(!t("2 1").is_standard());
        assert!(t("1 2 4 / 3 5").is_standard());
    }

    #[test]
    fn double_weight_monomial() {
        let ex = t("1' 2' / 1");
        let m = ex.double_weight(2);
        assert_eq!(m.x_exponents(), &[1, 1]);
        assert_eq!(m.y_exponents(), &[1]);
    }
}
