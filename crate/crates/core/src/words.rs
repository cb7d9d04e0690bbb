//! 01-words and the objects they index: Dyck words, Ferrers diagrams and
//! noncrossing matchings.
//!
//! Words are stored 0-based; doc comments talk about letters 1-based, the way
//! they are written out (`w_1 w_2 ... w_L`). Every persisted format uses the
//! literal `"0011"` string form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {0:?} in 01-word (expected '0' or '1')")]
    InvalidLetter(char),
    #[error("words {0} and {1} do not have the same letter counts")]
    LetterCountMismatch(BinaryWord, BinaryWord),
    #[error("{0} is not a Dyck word")]
    NotDyck(BinaryWord),
    #[error("label {0} appears in more than one pair")]
    DuplicateLabel(u32),
    #[error("pair ({0}, {1}) does not join two distinct labels")]
    DegeneratePair(u32, u32),
    #[error("pairs {0:?} and {1:?} cross")]
    Crossing((u32, u32), (u32, u32)),
    #[error("matching is not a perfect matching on {{1..{0}}}")]
    NotStandardLabels(usize),
}

/// A finite word on the alphabet {0, 1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    letters: Vec<u8>,
}

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord {
            letters: Vec::new(),
        }
    }

    /// Builds a word from 0/1 values. Any nonzero byte is read as 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        BinaryWord {
            letters: bits.into_iter().map(|b| u8::from(b != 0)).collect(),
        }
    }

    /// `0^a 1^b`.
    pub fn zeros_then_ones(a: usize, b: usize) -> Self {
        Self::from_bits(std::iter::repeat_n(0, a).chain(std::iter::repeat_n(1, b)))
    }

    /// `(01)^n`, the largest element of `D_n`.
    pub fn alternating(n: usize) -> Self {
        Self::from_bits((0..2 * n).map(|i| (i % 2) as u8))
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 0-based position `i`.
    pub fn get(&self, i: usize) -> u8 {
        self.letters[i]
    }

    pub fn count_zeros(&self) -> usize {
        self.letters.iter().filter(|&&b| b == 0).count()
    }

    pub fn count_ones(&self) -> usize {
        self.letters.iter().filter(|&&b| b == 1).count()
    }

    /// Prefix sums of ones: entry `i` is the number of 1s among the first `i`
    /// letters, so the table has `len() + 1` entries and starts at 0.
    pub fn prefix_ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &b in &self.letters {
            acc += b as usize;
            out.push(acc);
        }
        out
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BinaryWord { letters }
    }

    /// The word made of letters `start..end` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> BinaryWord {
        BinaryWord {
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Dyck condition: equal counts and no prefix with more 1s than 0s.
    pub fn is_dyck(&self) -> bool {
        let mut height: isize = 0;
        for &b in &self.letters {
            height += if b == 0 { 1 } else { -1 };
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    /// `w*` with `w*_i = 1 - w_{L+1-i}`; transposes the diagram.
    pub fn conjugate(&self) -> BinaryWord {
        BinaryWord {
            letters: self.letters.iter().rev().map(|&b| 1 - b).collect(),
        }
    }

    /// Inversion number: pairs `i < j` with `(w_i, w_j) = (1, 0)`. This is the
    /// number of boxes of the diagram.
    pub fn degree(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for &b in &self.letters {
            if b == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    fn same_counts(&self, other: &BinaryWord) -> Result<(), WordError> {
        if self.count_zeros() != other.count_zeros() || self.count_ones() != other.count_ones() {
            return Err(WordError::LetterCountMismatch(self.clone(), other.clone()));
        }
        Ok(())
    }

    /// Diagram inclusion, tested on prefix sums of ones.
    pub fn leq(&self, other: &BinaryWord) -> Result<bool, WordError> {
        self.same_counts(other)?;
        Ok(self
            .prefix_ones()
            .iter()
            .zip(other.prefix_ones())
            .all(|(&a, b)| a <= b))
    }

    /// Classifies the skew shape `other / self`.
    pub fn strip_type(&self, other: &BinaryWord) -> Result<StripType, WordError> {
        if !self.leq(other)? {
            return Ok(StripType::NotContained);
        }
        let inner = self.diagram();
        let outer = other.diagram();
        let (mu, lambda) = (inner.rows(), outer.rows());
        // Horizontal strip iff the rows interlace: lambda_{i+1} <= mu_i.
        let horizontal = (0..lambda.len().saturating_sub(1)).all(|i| lambda[i + 1] <= mu[i]);
        let vertical = lambda.iter().zip(mu).all(|(l, m)| l - m <= 1);
        Ok(match (horizontal, vertical) {
            (true, true) => StripType::Both,
            (true, false) => StripType::Horizontal,
            (false, true) => StripType::Vertical,
            (false, false) => StripType::Neither,
        })
    }

    /// True when `other / self` is a horizontal strip (possibly empty).
    pub fn horizontal_strip_to(&self, other: &BinaryWord) -> Result<bool, WordError> {
        Ok(self.strip_type(other)?.is_horizontal())
    }

    pub fn diagram(&self) -> FerrersDiagram {
        FerrersDiagram::from_word(self)
    }

    /// `0^m w 1^m`.
    pub fn nest(&self, m: usize) -> BinaryWord {
        BinaryWord::zeros_then_ones(m, 0)
            .concat(self)
            .concat(&BinaryWord::zeros_then_ones(0, m))
    }

    /// Reads a Dyck word as balanced parentheses; position `i` (1-based) of a
    /// 0 is matched with the position of its closing 1.
    pub fn to_matching(&self) -> Result<LinkPattern, WordError> {
        if !self.is_dyck() {
            return Err(WordError::NotDyck(self.clone()));
        }
        let mut stack = Vec::new();
        let mut pairs = Vec::with_capacity(self.len() / 2);
        for (i, &b) in self.letters.iter().enumerate() {
            let label = (i + 1) as u32;
            if b == 0 {
                stack.push(label);
            } else {
                let open = stack.pop().expect("dyck word has a matching opener");
                pairs.push((open, label));
            }
        }
        LinkPattern::new(pairs)
    }

    /// Parses a word and insists on the Dyck property.
    pub fn parse_dyck(s: &str) -> Result<BinaryWord, WordError> {
        let w: BinaryWord = s.parse()?;
        if !w.is_dyck() {
            return Err(WordError::NotDyck(w));
        }
        Ok(w)
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(WordError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(BinaryWord { letters })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.letters {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of comparing two diagrams as a skew shape `outer / inner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripType {
    NotContained,
    Horizontal,
    Vertical,
    /// Both a horizontal and a vertical strip; includes the empty skew shape.
    Both,
    Neither,
}

impl StripType {
    pub fn is_horizontal(self) -> bool {
        matches!(self, StripType::Horizontal | StripType::Both)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, StripType::Vertical | StripType::Both)
    }
}

/// A Ferrers diagram inside a `k x l` bounding box, rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    rows: Vec<usize>,
    columns: usize,
}

impl FerrersDiagram {
    /// `rows` must be weakly decreasing and bounded by `columns`; the number of
    /// rows fixes the height of the bounding box.
    pub fn new(rows: Vec<usize>, columns: usize) -> Option<Self> {
        let decreasing = rows.windows(2).all(|w| w[0] >= w[1]);
        let fits = rows.first().is_none_or(|&r| r <= columns);
        (decreasing && fits).then_some(FerrersDiagram { rows, columns })
    }

    /// A partition with the tightest bounding box.
    pub fn from_partition(parts: &[usize]) -> Option<Self> {
        let columns = parts.first().copied().unwrap_or(0);
        Self::new(parts.to_vec(), columns)
    }

    /// North step per 0, east step per 1; the region up-left of the path.
    pub fn from_word(w: &BinaryWord) -> Self {
        let mut ones = 0;
        let mut rows = Vec::with_capacity(w.count_zeros());
        for &b in w.letters() {
            if b == 1 {
                ones += 1;
            } else {
                rows.push(ones);
            }
        }
        rows.reverse();
        FerrersDiagram {
            rows,
            columns: ones,
        }
    }

    pub fn to_word(&self) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.rows.len() + self.columns);
        let mut emitted = 0;
        for &r in self.rows.iter().rev() {
            bits.extend(std::iter::repeat_n(1, r - emitted));
            emitted = r;
            bits.push(0);
        }
        bits.extend(std::iter::repeat_n(1, self.columns - emitted));
        BinaryWord::from_bits(bits)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn bounding_box(&self) -> (usize, usize) {
        (self.rows.len(), self.columns)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Column lengths, left to right (only nonzero columns).
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.rows.first().copied().unwrap_or(0);
        (0..width)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect()
    }

    /// Boxes as `(row, column)`, 1-based from the top-left corner.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(k, &r)| (1..=r).map(move |l| (k + 1, l)))
    }
}

/// Noncrossing perfect matching on a finite set of integer labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    /// Sorted, each pair with its smaller label first.
    pairs: Vec<(u32, u32)>,
}

impl LinkPattern {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self, WordError> {
        let mut pairs: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        let mut labels: Vec<u32> = Vec::with_capacity(2 * pairs.len());
        for &(a, b) in &pairs {
            if a == b {
                return Err(WordError::DegeneratePair(a, b));
            }
            labels.push(a);
            labels.push(b);
        }
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(WordError::DuplicateLabel(w[0]));
        }
        // Stack check: walking labels in order, a closing label must close the
        // most recently opened pair.
        let mut partner = std::collections::HashMap::with_capacity(labels.len());
        for &(a, b) in &pairs {
            partner.insert(a, (a, b));
            partner.insert(b, (a, b));
        }
        let mut stack: Vec<(u32, u32)> = Vec::new();
        for &label in &labels {
            let pair = partner[&label];
            if label == pair.0 {
                stack.push(pair);
            } else {
                let top = stack.pop().expect("opener seen before closer");
                if top != pair {
                    return Err(WordError::Crossing(top, pair));
                }
            }
        }
        Ok(LinkPattern { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// The underlying ordered label set.
    pub fn labels(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels
    }

    /// Number of arches.
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn partner(&self, label: u32) -> Option<u32> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == label {
                Some(b)
            } else if b == label {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Inverse of [`BinaryWord::to_matching`]; needs labels `1..=2n`.
    pub fn to_dyck(&self) -> Result<BinaryWord, WordError> {
        let len = 2 * self.pairs.len();
        if self
            .labels()
            .iter()
            .enumerate()
            .any(|(i, &l)| l as usize != i + 1)
        {
            return Err(WordError::NotStandardLabels(len));
        }
        let mut bits = vec![0u8; len];
        for &(_, b) in &self.pairs {
            bits[b as usize - 1] = 1;
        }
        Ok(BinaryWord::from_bits(bits))
    }

    /// Adds `m` concentric outer arches around a pattern on `1..=2n`.
    pub fn nest(&self, m: usize) -> Result<LinkPattern, WordError> {
        self.to_dyck()?.nest(m).to_matching()
    }

    /// `r(X)`: every label shifted by one, labels living in `1..=modulus`.
    pub fn rotate(&self, modulus: u32) -> LinkPattern {
        self.shift(1, modulus)
    }

    /// Shift every label by `k` modulo `modulus` (labels in `1..=modulus`).
    pub fn shift(&self, k: u32, modulus: u32) -> LinkPattern {
        let wrap = |l: u32| (l - 1 + k) % modulus + 1;
        LinkPattern::new(self.pairs.iter().map(|&(a, b)| (wrap(a), wrap(b))))
            .expect("rotation preserves noncrossing perfect matchings")
    }

    /// Applies a label map; the result must again be noncrossing.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> Result<LinkPattern, WordError> {
        LinkPattern::new(self.pairs.iter().map(|&(a, b)| (f(a), f(b))))
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for LinkPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let arr: Vec<[u32; 2]> = self.pairs.iter().map(|&(a, b)| [a, b]).collect();
        arr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinkPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let arr = Vec::<[u32; 2]>::deserialize(deserializer)?;
        LinkPattern::new(arr.into_iter().map(|[a, b]| (a, b))).map_err(serde::de::Error::custom)
    }
}

/// All Dyck words of length `2n` in lexicographic order (0 < 1). The order
/// extends diagram inclusion, so `0^n 1^n` comes first and `(01)^n` last.
pub fn enumerate_dyck(n: usize) -> Vec<BinaryWord> {
    fn rec(open: usize, close: usize, n: usize, buf: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
        if buf.len() == 2 * n {
            out.push(BinaryWord::from_bits(buf.iter().copied()));
            return;
        }
        if open < n {
            buf.push(0);
            rec(open + 1, close, n, buf, out);
            buf.pop();
        }
        if close < open {
            buf.push(1);
            rec(open, close + 1, n, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// All 01-words with `zeros` zeros and `ones` ones, lexicographic.
pub fn enumerate_words(zeros: usize, ones: usize) -> Vec<BinaryWord> {
    fn rec(z: usize, o: usize, buf: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
        if z == 0 && o == 0 {
            out.push(BinaryWord::from_bits(buf.iter().copied()));
            return;
        }
        if z > 0 {
            buf.push(0);
            rec(z - 1, o, buf, out);
            buf.pop();
        }
        if o > 0 {
            buf.push(1);
            rec(z, o - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(zeros, ones, &mut Vec::new(), &mut out);
    out
}

pub fn catalan(n: usize) -> u64 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    (0..n as u64).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    /// Independent box-set model of a diagram: boxes (row from the bottom,
    /// column) read straight off the lattice path.
    fn box_set(word: &BinaryWord) -> BTreeSet<(usize, usize)> {
        let mut boxes = BTreeSet::new();
        let (mut x, mut y) = (0, 0);
        for &b in word.letters() {
            if b == 0 {
                for c in 0..x {
                    boxes.insert((y, c));
                }
                y += 1;
            } else {
                x += 1;
            }
        }
        boxes
    }

    #[test]
    fn dyck_small_sizes() {
        assert_eq!(enumerate_dyck(0), vec![BinaryWord::empty()]);
        assert_eq!(enumerate_dyck(2), vec![w("0011"), w("0101")]);
        let d5 = enumerate_dyck(5);
        assert_eq!(d5.len(), 42);
        assert!(d5.contains(&w("0010100111")));
    }

    #[test]
    fn dyck_counts_are_catalan() {
        for n in 0..=8 {
            assert_eq!(enumerate_dyck(n).len() as u64, catalan(n), "n={n}");
        }
        assert_eq!(catalan(5), 42);
    }

    #[test]
    fn dyck_order_extends_inclusion() {
        let d = enumerate_dyck(4);
        for (i, a) in d.iter().enumerate() {
            for b in &d[..i] {
                assert!(!a.leq(b).unwrap() || a == b, "{a} <= {b} but listed later");
            }
        }
        assert_eq!(d.first(), Some(&BinaryWord::zeros_then_ones(4, 4)));
        assert_eq!(d.last(), Some(&BinaryWord::alternating(4)));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(w("0101011110").conjugate(), w("1000010101"));
        assert_eq!(w("0011").conjugate(), w("0011"));
        for len in 0..=10 {
            for z in 0..=len {
                for word in enumerate_words(z, len - z) {
                    assert_eq!(word.conjugate().conjugate(), word);
                    assert_eq!(word.conjugate().count_zeros(), word.count_ones());
                }
            }
        }
    }

    #[test]
    fn conjugate_transposes_diagram() {
        for word in enumerate_words(4, 3) {
            let t = word.diagram().column_lengths();
            let c = word.conjugate().diagram();
            let rows: Vec<usize> = c.rows().iter().copied().filter(|&r| r > 0).collect();
            assert_eq!(rows, t, "{word}");
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(w("0101011110").degree(), 9);
        for n in 0..6 {
            assert_eq!(BinaryWord::zeros_then_ones(n, n).degree(), 0);
            assert_eq!(
                BinaryWord::alternating(n).degree(),
                n * n.saturating_sub(1) / 2
            );
        }
        for word in enumerate_dyck(5) {
            assert_eq!(word.degree(), box_set(&word).len());
            assert_eq!(word.degree(), word.conjugate().degree());
        }
    }

    #[test]
    fn leq_examples_and_errors() {
        assert!(w("0011").leq(&w("0101")).unwrap());
        assert!(!w("0101").leq(&w("0011")).unwrap());
        assert!(matches!(
            w("0011").leq(&w("011")),
            Err(WordError::LetterCountMismatch(..))
        ));
        for a in enumerate_dyck(3) {
            assert!(a.leq(&a).unwrap());
        }
    }

    #[test]
    fn leq_matches_box_inclusion() {
        for n in 0..=5 {
            let d = enumerate_dyck(n);
            for a in &d {
                for b in &d {
                    assert_eq!(
                        a.leq(b).unwrap(),
                        box_set(a).is_subset(&box_set(b)),
                        "{a} {b}"
                    );
                }
            }
        }
    }

    /// Column/row multiplicities of the skew box set.
    fn strip_oracle(a: &BinaryWord, b: &BinaryWord) -> StripType {
        let (sa, sb) = (box_set(a), box_set(b));
        if !sa.is_subset(&sb) {
            return StripType::NotContained;
        }
        let skew: Vec<_> = sb.difference(&sa).collect();
        let mut rows = std::collections::HashMap::new();
        let mut cols = std::collections::HashMap::new();
        for &&(r, c) in &skew {
            *rows.entry(r).or_insert(0) += 1;
            *cols.entry(c).or_insert(0) += 1;
        }
        let h = cols.values().all(|&v| v <= 1);
        let v = rows.values().all(|&v| v <= 1);
        match (h, v) {
            (true, true) => StripType::Both,
            (true, false) => StripType::Horizontal,
            (false, true) => StripType::Vertical,
            (false, false) => StripType::Neither,
        }
    }

    #[test]
    fn strip_examples() {
        assert_eq!(w("0011").strip_type(&w("0101")).unwrap(), StripType::Both);
        assert_eq!(w("0011").strip_type(&w("0011")).unwrap(), StripType::Both);
        assert_eq!(
            w("0101").strip_type(&w("0011")).unwrap(),
            StripType::NotContained
        );
        let expected = strip_oracle(&w("000111"), &w("011010"));
        assert_eq!(expected, StripType::Neither);
        assert_eq!(w("000111").strip_type(&w("011010")).unwrap(), expected);
    }

    #[test]
    fn strip_type_matches_oracle() {
        for z in 0..=4 {
            for o in 0..=4 {
                let words = enumerate_words(z, o);
                for a in &words {
                    for b in &words {
                        assert_eq!(a.strip_type(b).unwrap(), strip_oracle(a, b), "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_swaps_strip_kinds() {
        let d = enumerate_dyck(4);
        for a in &d {
            for b in &d {
                let s = a.strip_type(b).unwrap();
                let t = a.conjugate().strip_type(&b.conjugate()).unwrap();
                assert_eq!(s == StripType::NotContained, t == StripType::NotContained);
                assert_eq!(s.is_horizontal(), t.is_vertical(), "{a} {b}");
                assert_eq!(s.is_vertical(), t.is_horizontal(), "{a} {b}");
            }
        }
    }

    #[test]
    fn matching_examples() {
        let m = w("0010100111").to_matching().unwrap();
        assert_eq!(m.pairs(), &[(1, 10), (2, 3), (4, 5), (6, 9), (7, 8)]);
        assert_eq!(w("0011").to_matching().unwrap().pairs(), &[(1, 4), (2, 3)]);
        assert!(matches!(
            w("0110").to_matching(),
            Err(WordError::NotDyck(_))
        ));
        assert!(matches!(
            LinkPattern::new([(1, 3), (2, 4)]),
            Err(WordError::Crossing(..))
        ));
        assert!(matches!(
            LinkPattern::new([(1, 2), (2, 3)]),
            Err(WordError::DuplicateLabel(2))
        ));
    }

    #[test]
    fn matching_round_trip() {
        for word in enumerate_dyck(4) {
            assert_eq!(word.to_matching().unwrap().to_dyck().unwrap(), word);
        }
        for word in enumerate_dyck(6) {
            // LinkPattern::new rejects crossings, so success is the check.
            assert_eq!(word.to_matching().unwrap().size(), 6);
        }
    }

    #[test]
    fn nest_examples() {
        assert_eq!(w("0101").nest(1), w("001011"));
        let pi = w("0101").to_matching().unwrap();
        assert_eq!(pi.nest(0).unwrap(), pi);
        assert_eq!(pi.nest(1).unwrap(), w("001011").to_matching().unwrap());
        for n in 0..=4 {
            for p in enumerate_dyck(n) {
                for m in 0..4 {
                    assert_eq!(p.nest(m).degree(), p.degree());
                }
            }
        }
    }

    #[test]
    fn rotation_examples() {
        let x = LinkPattern::new([(1, 3)]).unwrap();
        assert_eq!(x.rotate(4), LinkPattern::new([(2, 4)]).unwrap());
        for p in enumerate_dyck(2) {
            let odd = p.to_matching().unwrap().relabel(|i| 2 * i - 1).unwrap();
            let mut r = odd.clone();
            for step in 1..=8 {
                r = r.rotate(8);
                let parity = step % 2;
                assert!(r.labels().iter().all(|&l| l % 2 == (1 + parity) % 2));
            }
            assert_eq!(r, odd);
        }
    }

    #[test]
    fn diagram_round_trip() {
        for word in enumerate_words(3, 4) {
            let d = word.diagram();
            assert_eq!(d.bounding_box(), (3, 4));
            assert_eq!(d.to_word(), word);
        }
        let d = w("0010100111").diagram();
        assert_eq!(d.rows(), &[2, 2, 1, 0, 0]);
    }

    #[test]
    fn link_pattern_json() {
        let m = w("0011").to_matching().unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[1,4],[2,3]]");
        let back: LinkPattern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<LinkPattern>("[[1,3],[2,4]]").is_err());
    }
}
