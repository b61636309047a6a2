//! Words in a free group, stored as sequences of unit letters.
//!
//! A word keeps exactly the letters it was given. Free reduction is a
//! separate step, so a padding relator like `a a^-1` stays two letters
//! long until someone asks for the reduced form.

use crate::{Error, Result};

/// One letter `g` or `g^-1`, with `gen` an index into a generator table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn gen(gen: usize) -> Self {
        Word { letters: vec![Letter::new(gen, false)] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Freely reduced form: no adjacent `g g^-1` pairs remain.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&last| last == l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Number of letters equal to `g` or `g^-1`.
    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exponent()).sum()
    }

    /// Replace every occurrence of generator `gen` by `w` (or its inverse),
    /// leaving other letters alone. The result is not reduced.
    pub fn substitute(&self, gen: usize, w: &Word) -> Word {
        let mut out = Word::empty();
        for &l in &self.letters {
            if l.gen == gen {
                let piece = if l.inv { w.inverse() } else { w.clone() };
                out.letters.extend(piece.letters);
            } else {
                out.push(l);
            }
        }
        out
    }

    /// Drop generator `gen` and shift higher indices down by one.
    pub fn renumber_after_removal(&self, gen: usize) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| {
                    debug_assert!(l.gen != gen);
                    Letter::new(if l.gen > gen { l.gen - 1 } else { l.gen }, l.inv)
                })
                .collect(),
        }
    }

    /// Parse a word against a generator table. Tokens are `g`, `g^k` for a
    /// nonzero integer `k`, and the commutator shorthand `[g,h]` which
    /// expands to `g h g^-1 h^-1`.
    pub fn parse(input: &str, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<Word> {
        let mut word = Word::empty();
        for tok in input.split_whitespace() {
            if let Some(inner) = tok.strip_prefix('[') {
                let inner = inner
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unterminated commutator `{tok}`")))?;
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("commutator `{tok}` needs two generators")))?;
                let a = lookup(a.trim()).ok_or_else(|| Error::UnknownGenerator(a.trim().into()))?;
                let b = lookup(b.trim()).ok_or_else(|| Error::UnknownGenerator(b.trim().into()))?;
                word.push(Letter::new(a, false));
                word.push(Letter::new(b, false));
                word.push(Letter::new(a, true));
                word.push(Letter::new(b, true));
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((name, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    if e == 0 {
                        return Err(Error::Parse(format!("zero exponent in `{tok}`")));
                    }
                    (name, e)
                }
            };
            let gen = lookup(name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
            for _ in 0..exp.unsigned_abs() {
                word.push(Letter::new(gen, exp < 0));
            }
        }
        Ok(word)
    }

    /// Render using the given generator names, merging runs into powers.
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1usize;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = &names[l.gen];
            let exp = l.exponent() * run as i64;
            if exp == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{exp}"));
            }
            i += run;
        }
        parts.join(" ")
    }
}
