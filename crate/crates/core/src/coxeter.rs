use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Default cap on element length for reduced-word enumeration.
pub const REDUCED_WORD_CAP: usize = 12;

/// A word in the simple generators; the letter `i` stands for `s_i`.
///
/// Letter 0 is the sign change on the first window position; letters
/// `i >= 1` are the adjacent transpositions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if no letter equals 0.
    pub fn is_zero_free(&self) -> bool {
        self.0.iter().all(|&l| l != 0)
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == 0).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word(Vec::new()));
        }
        let letters = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad letter {p:?} in word {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word(letters))
    }
}

/// Element of the hyperoctahedral group on `n` letters in window notation:
/// `window[i]` is the image of `i+1`, and the image of `-(i+1)` is implied
/// by antisymmetry. The absolute values of the window form a permutation
/// of `1..=n`. All-positive windows are exactly the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::BadWindow(format!(
                    "entry {v} out of range for window of size {n}"
                )));
            }
            if seen[a] {
                return Err(Error::BadWindow(format!("value {a} repeated")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Window size; valid generator letters are `0..n`.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// All window entries positive, i.e. the element lies in the symmetric
    /// group and has 0-free reduced words.
    pub fn is_type_a(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// Right multiplication by `s_i` (action on positions).
    pub fn apply_right(&self, i: usize) -> Result<Self> {
        let n = self.window.len();
        if i >= n {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                rank: n,
            });
        }
        let mut w = self.window.clone();
        if i == 0 {
            w[0] = -w[0];
        } else {
            w.swap(i - 1, i);
        }
        Ok(SignedPermutation { window: w })
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_l}` in a window of size `n`,
    /// computed by acting on positions left to right.
    pub fn evaluate(word: &Word, n: usize) -> Result<Self> {
        let mut p = SignedPermutation::identity(n);
        for &l in word.letters() {
            p = p.apply_right(l as usize)?;
        }
        Ok(p)
    }

    /// Coxeter length: inversions of the window plus the sum of the
    /// absolute values of its negative entries.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0usize;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = w
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v.unsigned_abs() as usize)
            .sum();
        inv + neg
    }

    /// True when right multiplication by `s_i` shortens the element.
    pub fn has_right_descent(&self, i: usize) -> Result<bool> {
        let n = self.window.len();
        if i >= n {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                rank: n,
            });
        }
        Ok(if i == 0 {
            self.window[0] < 0
        } else {
            self.window[i - 1] > self.window[i]
        })
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.window.len())
            .filter(|&i| self.has_right_descent(i).unwrap())
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let n = self.window.len();
        let mut w = vec![0i32; n];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            w[pos] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation { window: w }
    }

    /// One reduced word, built by repeatedly stripping the smallest right
    /// descent. Deterministic.
    pub fn any_reduced_word(&self) -> Word {
        let mut rev = Vec::with_capacity(self.length());
        let mut p = self.clone();
        while let Some(&i) = p.right_descents().first() {
            rev.push(i as u8);
            p = p.apply_right(i).unwrap();
        }
        rev.reverse();
        Word(rev)
    }

    /// Number of 0 letters in a reduced word. Independent of the chosen
    /// word: braid moves 0101 <-> 1010 and all commutations preserve it.
    pub fn zero_count(&self) -> usize {
        self.any_reduced_word().zero_count()
    }

    /// All reduced words, sorted. Errors when the length exceeds `cap`.
    pub fn reduced_words(&self, cap: usize) -> Result<Vec<Word>> {
        let len = self.length();
        if len > cap {
            return Err(Error::ResourceLimit { length: len, cap });
        }
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(len);
        collect_words(self, &mut buf, &mut out);
        out.sort();
        Ok(out)
    }
}

fn collect_words(p: &SignedPermutation, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
    let descents = p.right_descents();
    if descents.is_empty() {
        let mut w = buf.clone();
        w.reverse();
        out.push(Word(w));
        return;
    }
    for i in descents {
        buf.push(i as u8);
        collect_words(&p.apply_right(i).unwrap(), buf, out);
        buf.pop();
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("window {s:?} must be bracketed")))?;
        let window = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {p:?}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        SignedPermutation::from_window(window)
    }
}

/// All elements of length at most `max_len` in a window of size `n`,
/// using generators `0..n` when `include_zero` is set and `1..n`
/// otherwise. Sorted by (length, window).
pub fn all_elements(n: usize, include_zero: bool, max_len: usize) -> Vec<SignedPermutation> {
    let first = if include_zero { 0 } else { 1 };
    let mut seen: HashSet<SignedPermutation> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = SignedPermutation::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        if p.length() == max_len {
            continue;
        }
        for i in first..n {
            if !p.has_right_descent(i).unwrap() {
                let q = p.apply_right(i).unwrap();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|p| (p.length(), p.window.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation_convention() {
        let p = SignedPermutation::evaluate(&word("2,0,1,2"), 4).unwrap();
        assert_eq!(p.window(), &[3, 2, -1, 4]);

        let q = SignedPermutation::evaluate(&word("3,2,1,2,3,5,4,3"), 6).unwrap();
        assert_eq!(q.window(), &[4, 2, 6, 3, 1, 5]);
        assert!(q.is_type_a());
        assert_eq!(q.length(), 8);

        let r = SignedPermutation::evaluate(&word("3,4,3,1,0,6,7,1,0,6"), 8).unwrap();
        assert_eq!(r.window(), &[-1, -2, 5, 4, 3, 8, 7, 6]);
        assert_eq!(r.length(), 10);
    }

    #[test]
    fn length_matches_cayley_graph_distance() {
        // BFS over the rank-3 hyperoctahedral group: 2^3 * 3! = 48 elements.
        let mut dist: HashMap<SignedPermutation, usize> = HashMap::new();
        let id = SignedPermutation::identity(3);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for i in 0..3 {
                let q = p.apply_right(i).unwrap();
                if !dist.contains_key(&q) {
                    dist.insert(q.clone(), d + 1);
                    queue.push_back(q);
                }
            }
        }
        assert_eq!(dist.len(), 48);
        for (p, d) in &dist {
            assert_eq!(p.length(), *d, "window {p}");
        }
    }

    #[test]
    fn reduced_words_by_descents_match_brute_force() {
        // Every element of length <= 4 in rank 3: compare the descent
        // recursion against filtering all words of that length.
        for p in all_elements(3, true, 4) {
            let l = p.length();
            let words = p.reduced_words(REDUCED_WORD_CAP).unwrap();
            let mut brute = Vec::new();
            let mut buf = vec![0u8; l];
            enumerate_words(3, l, 0, &mut buf, &mut |w| {
                let q = SignedPermutation::evaluate(&Word(w.to_vec()), 3).unwrap();
                if q == p {
                    brute.push(Word(w.to_vec()));
                }
            });
            brute.sort();
            assert_eq!(words, brute, "element {p}");
        }

        fn enumerate_words(n: usize, l: usize, pos: usize, buf: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
            if pos == l {
                f(buf);
                return;
            }
            for i in 0..n as u8 {
                buf[pos] = i;
                enumerate_words(n, l, pos + 1, buf, f);
            }
        }
    }

    #[test]
    fn reduced_words_of_a_double_sign_change() {
        let p: SignedPermutation = "[-2,-1,4,3]".parse().unwrap();
        assert_eq!(p.length(), 4);
        let words = p.reduced_words(REDUCED_WORD_CAP).unwrap();
        let expected: Vec<Word> = ["0,1,0,3", "0,1,3,0", "0,3,1,0", "3,0,1,0"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(words, expected);
        assert_eq!(p.zero_count(), 2);
    }

    #[test]
    fn all_positive_windows_have_zero_free_words() {
        for p in all_elements(3, true, 9) {
            let zero_free = p
                .reduced_words(REDUCED_WORD_CAP)
                .unwrap()
                .iter()
                .all(|w| w.is_zero_free());
            assert_eq!(p.is_type_a(), zero_free, "element {p}");
        }
    }

    #[test]
    fn zero_count_is_word_independent() {
        for p in all_elements(3, true, 9) {
            let words = p.reduced_words(REDUCED_WORD_CAP).unwrap();
            let z = p.zero_count();
            assert!(words.iter().all(|w| w.zero_count() == z), "element {p}");
        }
    }

    #[test]
    fn inverse_properties() {
        for p in all_elements(3, true, 5) {
            let inv = p.inverse();
            assert_eq!(inv.length(), p.length());
            assert_eq!(inv.inverse(), p);
            // w * w^{-1} = id, multiplying by a reduced word of the inverse
            let mut q = p.clone();
            for &l in inv.any_reduced_word().letters() {
                q = q.apply_right(l as usize).unwrap();
            }
            assert!(q.is_identity(), "element {p}");
        }
    }

    #[test]
    fn element_sweep_sizes() {
        // Whole rank-3 group vs its all-positive subgroup.
        assert_eq!(all_elements(3, true, 9).len(), 48);
        assert_eq!(all_elements(3, false, 9).len(), 6);
        let longest = all_elements(4, false, 6)
            .into_iter()
            .filter(|p| p.length() == 6)
            .collect::<Vec<_>>();
        assert_eq!(longest.len(), 1);
        assert_eq!(longest[0].window(), &[4, 3, 2, 1]);
        assert_eq!(longest[0].reduced_words(12).unwrap().len(), 16);
    }

    #[test]
    fn window_parse_and_display_round_trip() {
        for s in ["[-2,-1,4,3]", "[3,2,-1,4]", "[1,2,3]"] {
            let p: SignedPermutation = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("[1,1]".parse::<SignedPermutation>().is_err());
        assert!("[0,2]".parse::<SignedPermutation>().is_err());
        assert!("[3]".parse::<SignedPermutation>().is_err());
        assert!("1,2,3".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn resource_cap_is_enforced() {
        let p: SignedPermutation = "[-1,-2,-3,-4]".parse().unwrap();
        assert_eq!(p.length(), 16);
        match p.reduced_words(12) {
            Err(Error::ResourceLimit { length: 16, cap: 12 }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }
}
