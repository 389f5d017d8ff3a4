use crate::coxeter::{SignedPermutation, Word};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Which family of block-factorizations to enumerate.
///
/// * `A`: every block strictly increasing, letters `>= 1`.
/// * `C`: every block unimodal (strictly decreasing, then strictly
///   increasing, with a unique minimum), letters `>= 0`.
/// * `D`: every block strictly increasing in the signed order
///   `-n < ... < -1 < 0 < 1 < ... < n`, where `-i` stands for a barred
///   letter and 0 is never barred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    A,
    C,
    D,
}

/// A word cut into `k` ordered blocks, some possibly empty. Entries are
/// letters of the word; a negative entry `-i` is the letter `i` wearing a
/// bar (only meaningful for `FactorKind::D`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    blocks: Vec<Vec<i16>>,
}

impl Factorization {
    pub fn new(blocks: Vec<Vec<i16>>) -> Self {
        Factorization { blocks }
    }

    pub fn blocks(&self) -> &[Vec<i16>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn nonempty_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| !b.is_empty()).count()
    }

    /// Concatenation of all blocks with bars stripped.
    pub fn flattened_word(&self) -> Word {
        Word(
            self.blocks
                .iter()
                .flatten()
                .map(|&l| l.unsigned_abs() as u8)
                .collect(),
        )
    }

    /// Block sizes, the exponent vector of the ordinary weight monomial.
    pub fn weight(&self) -> Vec<u16> {
        self.blocks.iter().map(|b| b.len() as u16).collect()
    }

    /// Per-block (barred count, plain count) pairs.
    pub fn double_weight(&self) -> (Vec<u16>, Vec<u16>) {
        let bars = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&l| l < 0).count() as u16)
            .collect();
        let plains = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&l| l >= 0).count() as u16)
            .collect();
        (bars, plains)
    }

    pub fn is_valid(&self, kind: FactorKind) -> bool {
        self.blocks.iter().all(|b| block_is_valid(b, kind))
    }
}

pub fn block_is_valid(b: &[i16], kind: FactorKind) -> bool {
    match kind {
        FactorKind::A => b.iter().all(|&l| l >= 1) && b.windows(2).all(|w| w[0] < w[1]),
        FactorKind::C => block_is_unimodal(b),
        FactorKind::D => b.windows(2).all(|w| w[0] < w[1]),
    }
}

/// Strictly decreasing then strictly increasing, unique minimum, no
/// repeats of adjacent letters. Empty and singleton blocks qualify.
fn block_is_unimodal(b: &[i16]) -> bool {
    if b.iter().any(|&l| l < 0) {
        return false;
    }
    let mut rising = false;
    for w in b.windows(2) {
        if w[0] == w[1] {
            return false;
        }
        if w[0] < w[1] {
            rising = true;
        } else if rising {
            return false;
        }
    }
    true
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "(")?;
            for (i, l) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut blocks = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner_end = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let inner = &inner[..inner_end - 1];
            let block = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<i16>()
                            .map_err(|_| Error::Parse(format!("bad block letter {p:?}")))
                    })
                    .collect::<Result<Vec<i16>>>()?
            };
            blocks.push(block);
            rest = &rest[inner_end + 1..];
        }
        if blocks.is_empty() {
            return Err(Error::Parse("factorization needs at least one block".into()));
        }
        Ok(Factorization { blocks })
    }
}

/// All `k`-block factorizations of the reduced words of `w` of the given
/// kind, sorted. Kind `A` requires an all-positive window.
pub fn enumerate_factorizations(
    w: &SignedPermutation,
    kind: FactorKind,
    k: usize,
    cap: usize,
) -> Result<Vec<Factorization>> {
    if kind == FactorKind::A && !w.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let words = w.reduced_words(cap)?;
    let mut out = Vec::new();
    for word in &words {
        let letters: Vec<i16> = word.letters().iter().map(|&l| l as i16).collect();
        let mut blocks: Vec<Vec<i16>> = Vec::with_capacity(k);
        split_blocks(&letters, kind, k, &mut blocks, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Cut `rest` into `k` further blocks, appending every valid decoration.
fn split_blocks(
    rest: &[i16],
    kind: FactorKind,
    k: usize,
    blocks: &mut Vec<Vec<i16>>,
    out: &mut Vec<Factorization>,
) {
    if k == 0 {
        if rest.is_empty() {
            out.push(Factorization::new(blocks.clone()));
        }
        return;
    }
    // A block must leave enough letters behind only in the sense that the
    // remaining k-1 blocks can absorb them; blocks may be empty, so every
    // prefix length is a candidate.
    for take in 0..=rest.len() {
        let (head, tail) = rest.split_at(take);
        match kind {
            FactorKind::A | FactorKind::C => {
                if !block_is_valid(head, kind) {
                    continue;
                }
                blocks.push(head.to_vec());
                split_blocks(tail, kind, k - 1, blocks, out);
                blocks.pop();
            }
            FactorKind::D => {
                // Choose how many leading letters wear bars: the barred
                // prefix must strictly decrease without 0, the plain
                // suffix strictly increase. The join needs no check since
                // a barred letter is negative and the suffix is >= 0.
                for t in 0..=take {
                    let prefix_ok = head[..t].iter().all(|&l| l >= 1)
                        && head[..t].windows(2).all(|w| w[0] > w[1]);
                    let suffix_ok = head[t..].windows(2).all(|w| w[0] < w[1]);
                    if prefix_ok && suffix_ok {
                        let mut block = Vec::with_capacity(take);
                        block.extend(head[..t].iter().map(|&l| -l));
                        block.extend_from_slice(&head[t..]);
                        blocks.push(block);
                        split_blocks(tail, kind, k - 1, blocks, out);
                        blocks.pop();
                    }
                }
            }
        }
    }
}
