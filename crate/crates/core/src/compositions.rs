//! Argument lists of the nested sums, their encoding as words in `x, y`,
//! and the duality involution in its three equivalent forms:
//!
//! * partial sums, complement, first differences ([`dual`]);
//! * swapping letters and moving the final `y` ([`word_dual`]);
//! * the two-parameter family `(a, b)` ([`theorem1_form`]).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("entry {value} at position {index} must be at least 1")]
    NonPositiveEntry { index: usize, value: u32 },
    #[error("empty composition")]
    Empty,
    #[error("sequence is not strictly increasing at position {0}")]
    NotIncreasing(usize),
    #[error("word must end in y")]
    TrailingX,
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter {0:?} in word")]
    BadLetter(char),
    #[error("parameter lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// A finite sequence of nonnegative integers `s_1, ..., s_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `{value}^count`.
    pub fn repeat(value: u32, count: usize) -> Self {
        Composition(vec![value; count])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|s| = s_1 + ... + s_m`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Everything after the first entry.
    pub fn tail(&self) -> Composition {
        Composition(self.0.iter().skip(1).copied().collect())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Same composition with the first entry replaced.
    pub fn with_first(&self, first: u32) -> Composition {
        let mut v = self.0.clone();
        v[0] = first;
        Composition(v)
    }

    pub fn require_positive(&self) -> Result<(), CompositionError> {
        match self.0.iter().position(|&e| e == 0) {
            Some(index) => Err(CompositionError::NonPositiveEntry { index, value: 0 }),
            None => Ok(()),
        }
    }

    fn require_nonempty_positive(&self) -> Result<(), CompositionError> {
        if self.is_empty() {
            return Err(CompositionError::Empty);
        }
        self.require_positive()
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Composition(v.to_vec())
    }
}

impl fmt::Display for Composition {
    /// Comma separated, parseable by [`parse_composition`]. The empty
    /// composition prints as `{1}^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{1}}^0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_composition(s)
    }
}

/// Partial sums `s_1, s_1 + s_2, ...`.
pub fn alpha(s: &Composition) -> Result<Vec<u64>, CompositionError> {
    s.require_positive()?;
    Ok(s.0
        .iter()
        .scan(0u64, |acc, &e| {
            *acc += u64::from(e);
            Some(*acc)
        })
        .collect())
}

fn require_increasing(t: &[u64]) -> Result<(), CompositionError> {
    if t.is_empty() {
        return Err(CompositionError::Empty);
    }
    if t[0] == 0 {
        return Err(CompositionError::NotIncreasing(0));
    }
    match t.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(CompositionError::NotIncreasing(i + 1)),
        None => Ok(()),
    }
}

/// First differences; inverse of [`alpha`].
pub fn alpha_inv(t: &[u64]) -> Result<Composition, CompositionError> {
    if t.is_empty() {
        return Ok(Composition::empty());
    }
    require_increasing(t)?;
    let mut prev = 0;
    Ok(Composition(
        t.iter()
            .map(|&x| {
                let d = x - prev;
                prev = x;
                d as u32
            })
            .collect(),
    ))
}

/// Complement of `t_1, ..., t_{m-1}` in `{1, ..., t_m}`, in increasing order.
/// The last element `t_m` always survives, so it stays the maximum.
pub fn beta(t: &[u64]) -> Result<Vec<u64>, CompositionError> {
    require_increasing(t)?;
    let (&last, init) = t.split_last().unwrap();
    let mut removed = init.iter().peekable();
    let mut out = Vec::with_capacity((last as usize).saturating_sub(init.len()));
    for k in 1..=last {
        if removed.peek() == Some(&&k) {
            removed.next();
        } else {
            out.push(k);
        }
    }
    Ok(out)
}

/// The duality involution `alpha^{-1} beta alpha`.
pub fn dual(s: &Composition) -> Result<Composition, CompositionError> {
    s.require_nonempty_positive()?;
    alpha_inv(&beta(&alpha(s)?)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

/// A monomial in the noncommuting letters `x` and `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The automorphism exchanging `x` and `y`.
    pub fn swap_letters(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| match l {
                    Letter::X => Letter::Y,
                    Letter::Y => Letter::X,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::Y => "y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(CompositionError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// `x^{s_1 - 1} y ... x^{s_m - 1} y`.
pub fn encode_word(s: &Composition) -> Result<Word, CompositionError> {
    s.require_nonempty_positive()?;
    let mut letters = Vec::with_capacity(s.weight() as usize);
    for &e in &s.0 {
        letters.extend(std::iter::repeat_n(Letter::X, e as usize - 1));
        letters.push(Letter::Y);
    }
    Ok(Word(letters))
}

/// Splits after each `y`; each block `x^{k} y` becomes the entry `k + 1`.
pub fn decode_word(w: &Word) -> Result<Composition, CompositionError> {
    if w.0.last() == Some(&Letter::X) {
        return Err(CompositionError::TrailingX);
    }
    let mut out = Vec::new();
    let mut run = 0u32;
    for l in &w.0 {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                out.push(run + 1);
                run = 0;
            }
        }
    }
    Ok(Composition(out))
}

/// `w* = (J w) x^{-1} y`: swap letters, then replace the trailing `x` that
/// the swap produced by `y`.
pub fn word_dual(w: &Word) -> Result<Word, CompositionError> {
    match w.0.last() {
        None => return Err(CompositionError::EmptyWord),
        Some(Letter::X) => return Err(CompositionError::TrailingX),
        Some(Letter::Y) => {}
    }
    let mut swapped = w.swap_letters();
    swapped.0.pop();
    swapped.0.push(Letter::Y);
    Ok(swapped)
}

/// All ways of replacing commas of `s` by plus signs.
///
/// There are `2^{m-1}` of them. The order is binary counting over the comma
/// positions with the first comma as the most significant bit, so the
/// unmerged composition comes first and the total sum last.
pub fn coarsenings(s: &Composition) -> Result<Vec<Composition>, CompositionError> {
    if s.is_empty() {
        return Err(CompositionError::Empty);
    }
    let commas = s.len() - 1;
    let mut out = Vec::with_capacity(1 << commas);
    for mask in 0u64..(1u64 << commas) {
        let mut v = vec![s.0[0]];
        for i in 0..commas {
            let merged = (mask >> (commas - 1 - i)) & 1 == 1;
            if merged {
                *v.last_mut().unwrap() += s.0[i + 1];
            } else {
                v.push(s.0[i + 1]);
            }
        }
        out.push(Composition(v));
    }
    Ok(out)
}

/// The two argument lists related by duality in the `(a, b)` parameter form:
///
/// left  = `{1}^{a_1-1}, b_1+1, ..., {1}^{a_{r-1}-1}, b_{r-1}+1, {1}^{a_r-1}, b_r`
/// right = `a_1, {1}^{b_1-1}, a_2+1, {1}^{b_2-1}, ..., a_r+1, {1}^{b_r-1}`
pub fn theorem1_form(a: &[u32], b: &[u32]) -> Result<(Composition, Composition), CompositionError> {
    if a.len() != b.len() {
        return Err(CompositionError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(CompositionError::Empty);
    }
    for (index, &value) in a.iter().chain(b).enumerate() {
        if value == 0 {
            return Err(CompositionError::NonPositiveEntry { index, value });
        }
    }
    let r = a.len();
    let mut left = Vec::new();
    for j in 0..r {
        left.extend(std::iter::repeat_n(1, a[j] as usize - 1));
        left.push(if j + 1 < r { b[j] + 1 } else { b[j] });
    }
    let mut right = vec![a[0]];
    right.extend(std::iter::repeat_n(1, b[0] as usize - 1));
    for j in 1..r {
        right.push(a[j] + 1);
        right.extend(std::iter::repeat_n(1, b[j] as usize - 1));
    }
    Ok((Composition(left), Composition(right)))
}

/// Inverse of the left half of [`theorem1_form`]: reads off `(a, b)` from a
/// composition with positive entries.
pub fn theorem1_params(s: &Composition) -> Result<(Vec<u32>, Vec<u32>), CompositionError> {
    s.require_nonempty_positive()?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let mut ones = 0u32;
    let last = s.len() - 1;
    for (i, &e) in s.0.iter().enumerate() {
        if i == last {
            a.push(ones + 1);
            b.push(e);
        } else if e == 1 {
            ones += 1;
        } else {
            a.push(ones + 1);
            b.push(e - 1);
            ones = 0;
        }
    }
    Ok((a, b))
}

/// All compositions with positive entries and the given weight, in
/// lexicographic order.
pub fn compositions_of_weight(weight: u32) -> Vec<Composition> {
    fn go(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weight > 0 {
        go(weight, &mut Vec::new(), &mut out);
    }
    out
}

/// All compositions with positive entries and weight `1..=max_weight`,
/// ordered by weight, then lexicographically.
pub fn compositions_up_to(max_weight: u32) -> Vec<Composition> {
    (1..=max_weight).flat_map(compositions_of_weight).collect()
}

/// Parses the argument-list grammar
///
/// ```text
/// list ::= item (',' item)*
/// item ::= INT | '{' INT '}' '^' INT
/// ```
///
/// where `{v}^c` stands for `c` copies of `v`. Whitespace is ignored.
pub fn parse_composition(text: &str) -> Result<Composition, CompositionError> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        at: 0,
        len: text.len(),
    };
    let mut out = Vec::new();
    loop {
        p.item(&mut out)?;
        match p.peek() {
            None => break,
            Some(',') => p.at += 1,
            Some('^') => return Err(p.error("repeat '^' applies only to a braced item like {1}^3")),
            Some(c) => return Err(p.error(&format!("expected ',' but found {c:?}"))),
        }
    }
    Ok(Composition(out))
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, msg: &str) -> CompositionError {
        CompositionError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CompositionError> {
        if self.peek() == Some(c) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn int(&mut self) -> Result<u32, CompositionError> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == start {
            self.at = start;
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        digits.parse().map_err(|_| {
            self.at = start;
            self.error("integer out of range")
        })
    }

    fn item(&mut self, out: &mut Vec<u32>) -> Result<(), CompositionError> {
        if self.peek() == Some('{') {
            self.at += 1;
            let v = self.int()?;
            self.expect('}')?;
            self.expect('^')?;
            let count = self.int()?;
            out.extend(std::iter::repeat_n(v, count as usize));
        } else {
            out.push(self.int()?);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::from(v)
    }

    #[test]
    fn alpha_partial_sums() {
        assert_eq!(alpha(&c(&[2, 2])).unwrap(), vec![2, 4]);
        assert_eq!(alpha(&c(&[1, 1, 3, 1])).unwrap(), vec![1, 2, 5, 6]);
        assert_eq!(alpha_inv(&[1, 3, 4]).unwrap(), c(&[1, 2, 1]));
        assert!(alpha(&c(&[1, 0])).is_err());
    }

    #[test]
    fn beta_complements() {
        assert_eq!(beta(&[2, 4]).unwrap(), vec![1, 3, 4]);
        assert_eq!(beta(&[1]).unwrap(), vec![1]);
        assert_eq!(
            beta(&beta(&[1, 2, 5, 6]).unwrap()).unwrap(),
            vec![1, 2, 5, 6]
        );
        assert_eq!(beta(&[]), Err(CompositionError::Empty));
        assert_eq!(beta(&[2, 2]), Err(CompositionError::NotIncreasing(1)));
    }

    #[test]
    fn dual_of_worked_examples() {
        assert_eq!(dual(&c(&[2, 2])).unwrap(), c(&[1, 2, 1]));
        assert_eq!(dual(&c(&[1, 1, 3, 1])).unwrap(), c(&[3, 1, 2]));
        for m in 1..=6 {
            assert_eq!(dual(&Composition::repeat(1, m)).unwrap(), c(&[m as u32]));
        }
        assert_eq!(dual(&Composition::empty()), Err(CompositionError::Empty));
        assert!(matches!(
            dual(&c(&[1, 0])),
            Err(CompositionError::NonPositiveEntry { index: 1, .. })
        ));
    }

    #[test]
    fn words() {
        assert_eq!(encode_word(&c(&[2, 2])).unwrap().to_string(), "xyxy");
        assert_eq!(
            decode_word(&"yxyy".parse().unwrap()).unwrap(),
            c(&[1, 2, 1])
        );
        assert_eq!(encode_word(&c(&[4])).unwrap().to_string(), "xxxy");
        assert_eq!(
            decode_word(&"xyx".parse().unwrap()),
            Err(CompositionError::TrailingX)
        );
        assert_eq!(decode_word(&Word::default()).unwrap(), Composition::empty());
        assert!(encode_word(&Composition::empty()).is_err());
    }

    #[test]
    fn word_dual_examples() {
        let w: Word = "xyxy".parse().unwrap();
        assert_eq!(word_dual(&w).unwrap().to_string(), "yxyy");
        assert_eq!(
            word_dual(&Word::default()),
            Err(CompositionError::EmptyWord)
        );
        assert_eq!(
            word_dual(&"yx".parse().unwrap()),
            Err(CompositionError::TrailingX)
        );
        let s = c(&[2, 2]);
        assert_eq!(
            decode_word(&word_dual(&encode_word(&s).unwrap()).unwrap()).unwrap(),
            dual(&s).unwrap()
        );
    }

    #[test]
    fn word_dual_involutive_on_all_short_words() {
        for len in 1..=10usize {
            for bits in 0u32..(1 << (len - 1)) {
                let mut letters: Vec<Letter> = (0..len - 1)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Letter::Y
                        } else {
                            Letter::X
                        }
                    })
                    .collect();
                letters.push(Letter::Y);
                let w = Word::new(letters);
                let d = word_dual(&w).unwrap();
                assert_eq!(d.len(), w.len());
                assert_eq!(word_dual(&d).unwrap(), w);
            }
        }
    }

    #[test]
    fn coarsening_order() {
        assert_eq!(coarsenings(&c(&[5])).unwrap(), vec![c(&[5])]);
        assert_eq!(coarsenings(&c(&[1, 2])).unwrap(), vec![c(&[1, 2]), c(&[3])]);
        assert_eq!(
            coarsenings(&c(&[1, 2, 4])).unwrap(),
            vec![c(&[1, 2, 4]), c(&[1, 6]), c(&[3, 4]), c(&[7])]
        );
        assert_eq!(
            coarsenings(&Composition::empty()),
            Err(CompositionError::Empty)
        );
    }

    #[test]
    fn theorem1_form_examples() {
        assert_eq!(
            theorem1_form(&[3, 1], &[2, 1]).unwrap(),
            (c(&[1, 1, 3, 1]), c(&[3, 1, 2]))
        );
        assert_eq!(
            theorem1_form(&[1, 1], &[1, 2]).unwrap(),
            (c(&[2, 2]), c(&[1, 2, 1]))
        );
        for a in 1..5u32 {
            for b in 1..5u32 {
                let mut left = vec![1; a as usize - 1];
                left.push(b);
                let mut right = vec![a];
                right.extend(vec![1; b as usize - 1]);
                assert_eq!(theorem1_form(&[a], &[b]).unwrap(), (c(&left), c(&right)));
            }
        }
        assert_eq!(
            theorem1_form(&[1], &[1, 2]),
            Err(CompositionError::LengthMismatch(1, 2))
        );
        assert!(theorem1_form(&[0], &[1]).is_err());
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(parse_composition("1,1,3,1").unwrap(), c(&[1, 1, 3, 1]));
        assert_eq!(parse_composition("{1}^3,2").unwrap(), c(&[1, 1, 1, 2]));
        assert_eq!(parse_composition("{1}^0,5").unwrap(), c(&[5]));
        assert_eq!(parse_composition("{1}^0").unwrap(), Composition::empty());
        assert_eq!(parse_composition(" 0 , 2 ").unwrap(), c(&[0, 2]));
        assert!(matches!(
            parse_composition("1,,2"),
            Err(CompositionError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_composition("2^3"),
            Err(CompositionError::Syntax { pos: 1, .. })
        ));
        assert!(parse_composition("").is_err());
        assert!(parse_composition("{1}3").is_err());
        assert!(parse_composition("-1").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in compositions_up_to(5) {
            assert_eq!(s.to_string().parse::<Composition>().unwrap(), s);
        }
        assert_eq!(
            Composition::empty()
                .to_string()
                .parse::<Composition>()
                .unwrap(),
            Composition::empty()
        );
    }

    #[test]
    fn enumeration_counts() {
        for w in 1..=8u32 {
            assert_eq!(compositions_of_weight(w).len(), 1 << (w - 1));
        }
        assert_eq!(compositions_up_to(6).len(), 63);
    }
}
