//! Words in the deformed symmetric algebra and their normal forms.
//!
//! An out-of-order adjacent pair is rewritten as
//! `x_{d,w} x_{e,v} -> (-1)^{(d,e)} x_{e, v+Δ1} x_{d, w+Δ2}` until the word is weakly
//! decreasing in the canonical order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::categories::weight_shift;
use crate::error::{Error, Result};
use crate::quiver::{self, DimVec, Quiver};

/// Rewriting gives up after this many steps.
pub const STEP_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub d: DimVec,
    pub w: i64,
    pub idx: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub sign: i64,
    pub letters: Vec<Generator>,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.sign < 0 { "-" } else { "+" })?;
        for g in &self.letters {
            let d: Vec<String> = g.d.iter().map(|x| x.to_string()).collect();
            write!(f, " x[{};{};{}]", d.join(","), g.w, g.idx)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Seeded(u64),
}

/// Canonical comparison: `d` lexicographically, then `w` (descending when `Δ1(d,d) >= 0`,
/// ascending otherwise), then the basis index.
pub fn canonical_cmp(quiver: &Quiver, a: &Generator, b: &Generator) -> Ordering {
    a.d.cmp(&b.d).then_with(|| {
        let (d1, _) = weight_shift(quiver, &a.d, &a.d).expect("dimension checked");
        let wc = if d1 >= 0 { a.w.cmp(&b.w) } else { b.w.cmp(&a.w) };
        wc.then(a.idx.cmp(&b.idx))
    })
}

pub fn is_normal(quiver: &Quiver, word: &Word) -> bool {
    word.letters.windows(2).all(|p| canonical_cmp(quiver, &p[0], &p[1]) != Ordering::Less)
}

fn rewrite_at(quiver: &Quiver, word: &mut Word, i: usize) -> Result<()> {
    let a = word.letters[i].clone();
    let b = word.letters[i + 1].clone();
    let (d1, d2) = weight_shift(quiver, &a.d, &b.d)?;
    let chi = quiver.euler_form(&a.d, &b.d)?;
    word.sign *= crate::rational::sign_pow(chi);
    word.letters[i] = Generator { d: b.d, w: b.w + d1, idx: b.idx };
    word.letters[i + 1] = Generator { d: a.d, w: a.w + d2, idx: a.idx };
    Ok(())
}

pub fn dsym_normal_form(quiver: &Quiver, word: &Word, strategy: Strategy) -> Result<Word> {
    if !quiver.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    for g in &word.letters {
        quiver.check_dim(&g.d)?;
        if quiver::is_zero(&g.d) {
            return Err(Error::Precondition("generator of dimension zero".into()));
        }
    }
    let mut rng = match strategy {
        Strategy::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    let mut cur = word.clone();
    let mut seen: HashSet<Vec<Generator>> = HashSet::new();
    for _ in 0..STEP_LIMIT {
        let bad: Vec<usize> = (0..cur.letters.len().saturating_sub(1))
            .filter(|&i| canonical_cmp(quiver, &cur.letters[i], &cur.letters[i + 1]) == Ordering::Less)
            .collect();
        if bad.is_empty() {
            return Ok(cur);
        }
        if !seen.insert(cur.letters.clone()) {
            return Err(Error::NonTerminating(seen.len()));
        }
        let i = match (&strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => bad[0],
            (Strategy::Rightmost, _) => *bad.last().unwrap(),
            (Strategy::Seeded(_), Some(r)) => bad[r.gen_range(0..bad.len())],
            _ => unreachable!(),
        };
        rewrite_at(quiver, &mut cur, i)?;
    }
    Err(Error::NonTerminating(STEP_LIMIT))
}

pub fn total_weight(word: &Word) -> i64 {
    word.letters.iter().map(|g| g.w).sum()
}

pub fn total_dim(word: &Word) -> DimVec {
    let n = word.letters.first().map_or(0, |g| g.d.len());
    word.letters.iter().fold(vec![0; n], |acc, g| quiver::add(&acc, &g.d))
}

/// Random word with total dimension at most `max_total`, weights in `[-w_abs, w_abs]` and basis
/// indices below `idx_max`.
pub fn random_word(quiver: &Quiver, rng: &mut impl Rng, max_total: u32, w_abs: i64, idx_max: u32) -> Word {
    let n = quiver.vertex_count();
    let budget = rng.gen_range(1..=max_total);
    let mut used = 0;
    let mut letters = Vec::new();
    while used < budget {
        let room = budget - used;
        let size = rng.gen_range(1..=room.min(2));
        let mut d = vec![0u32; n];
        for _ in 0..size {
            d[rng.gen_range(0..n)] += 1;
        }
        used += size;
        letters.push(Generator { d, w: rng.gen_range(-w_abs..=w_abs), idx: rng.gen_range(0..idx_max) });
    }
    Word { sign: 1, letters }
}

/// Parses `d:w:i` tokens separated by whitespace, `d` comma-separated.
pub fn parse_word(s: &str) -> Result<Word> {
    let bad = |t: &str| Error::Malformed(format!("bad generator {t:?}, expected d:w:i"));
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let parts: Vec<&str> = tok.split(':').collect();
        if parts.len() != 3 {
            return Err(bad(tok));
        }
        let d = parts[0].split(',').map(|x| x.parse::<u32>()).collect::<std::result::Result<Vec<_>, _>>().map_err(|_| bad(tok))?;
        let w = parts[1].parse().map_err(|_| bad(tok))?;
        let idx = parts[2].parse().map_err(|_| bad(tok))?;
        letters.push(Generator { d, w, idx });
    }
    Ok(Word { sign: 1, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: u32, w: i64) -> Generator {
        Generator { d: vec![d], w, idx: 0 }
    }

    #[test]
    fn q3_example() {
        let q3 = Quiver::loops(3);
        let word = Word { sign: 1, letters: vec![g(1, 0), g(1, 5)] };
        let nf = dsym_normal_form(&q3, &word, Strategy::Leftmost).unwrap();
        assert_eq!(nf, Word { sign: 1, letters: vec![g(1, 7), g(1, -2)] });
    }

    #[test]
    fn ordered_word_unchanged() {
        let q3 = Quiver::loops(3);
        let word = Word { sign: 1, letters: vec![g(2, 1), g(1, 3), g(1, -1)] };
        assert_eq!(dsym_normal_form(&q3, &word, Strategy::Rightmost).unwrap(), word);
    }

    #[test]
    fn edgeless_same_dimension_terminates() {
        // Δ1(d,d) < 0 here, so the weight order is ascending
        let q = Quiver::two_cycle();
        let a = Generator { d: vec![1, 0], w: 3, idx: 0 };
        let b = Generator { d: vec![1, 0], w: 1, idx: 1 };
        let nf = dsym_normal_form(&q, &Word { sign: 1, letters: vec![a, b] }, Strategy::Leftmost).unwrap();
        assert!(is_normal(&q, &nf));
        assert_eq!(total_weight(&nf), 4);
    }

    #[test]
    fn parse_round() {
        let w = parse_word("1,0:2:0 0,1:-1:1").unwrap();
        assert_eq!(w.letters.len(), 2);
        assert_eq!(w.letters[1], Generator { d: vec![0, 1], w: -1, idx: 1 });
        assert!(parse_word("1:2").is_err());
    }
}
