//! Parsers for the textual syntaxes used on the command line.
//!
//! - scalars: decimal integers (canonicalized per ring);
//! - vectors: sums of terms `e(<idx>)` or `e(<idx>)*<scalar>`, or the dense
//!   bracket form `[c_{-l},…,c_{-1},c_1,…,c_l]`;
//! - absolute words: `X(1,2;3) X(2,-2;1)^-1`;
//! - relative words: atoms `Y(1,2;4)`, optionally prefixed by an absolute
//!   word and `|>` marking the formal action, e.g. `X(1,3;1) |> Y(1,2;4)`;
//! - van der Kallen generators:
//!   `(word=X(1,2;1), i=2, v=[0,0,0,1,0,0], a=2, b=0)`.

use crate::error::{Error, Result};
use crate::relative::{RelAtom, RelGen, RelWord};
use crate::ring::{FormIdeal, RingSpec, Scalar};
use crate::space::{HVector, Idx};
use crate::steinberg::{AbsGen, AbsWord, ElemColumn, Sign};
use crate::vdk::{VdKGen, VdKWord};

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(parse_err(self.pos, format!("expected {token:?}")))
        }
    }

    fn integer(&mut self) -> Result<i128> {
        self.skip_ws();
        let rest = self.rest();
        let mut len = 0;
        let bytes = rest.as_bytes();
        if len < bytes.len() && (bytes[len] == b'-' || bytes[len] == b'+') {
            len += 1;
        }
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len == 0 || rest[..len].ends_with(['-', '+']) {
            return Err(parse_err(self.pos, "expected an integer"));
        }
        let value: i128 = rest[..len]
            .parse()
            .map_err(|_| parse_err(self.pos, "integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    fn index(&mut self, rank: usize) -> Result<Idx> {
        let pos = self.pos;
        let raw = self.integer()?;
        Idx::new(raw as i32, rank).map_err(|e| parse_err(pos, e.to_string()))
    }
}

/// Parses a scalar in the given ring.
pub fn parse_scalar(ring: RingSpec, text: &str) -> Result<Scalar> {
    let mut c = Cursor::new(text);
    let v = c.integer()?;
    if !c.done() {
        return Err(parse_err(c.pos, "trailing input after scalar"));
    }
    Ok(Scalar::new(ring, v))
}

/// Parses a vector: either `[c,...]` in storage order or a sum of
/// `e(<idx>)` / `e(<idx>)*<scalar>` terms (also accepting `<scalar>*e(<idx>)`).
pub fn parse_vector(rank: usize, ring: RingSpec, text: &str) -> Result<HVector> {
    let mut c = Cursor::new(text);
    let v = parse_vector_at(&mut c, rank, ring)?;
    if !c.done() {
        return Err(parse_err(c.pos, "trailing input after vector"));
    }
    Ok(v)
}

fn parse_vector_at(c: &mut Cursor<'_>, rank: usize, ring: RingSpec) -> Result<HVector> {
    c.skip_ws();
    if c.eat("[") {
        let mut coords = Vec::new();
        loop {
            coords.push(Scalar::new(ring, c.integer()?));
            if c.eat("]") {
                break;
            }
            c.expect(",")?;
        }
        return HVector::from_coords(rank, ring, coords);
    }
    let mut v = HVector::zero(rank, ring);
    loop {
        let negate = c.eat("-");
        if !negate {
            let _ = c.eat("+");
        }
        c.skip_ws();
        let (idx, coeff) = if c.rest().starts_with('e') {
            c.expect("e")?;
            c.expect("(")?;
            let idx = c.index(rank)?;
            c.expect(")")?;
            let coeff = if c.eat("*") {
                Scalar::new(ring, c.integer()?)
            } else {
                Scalar::one(ring)
            };
            (idx, coeff)
        } else {
            let n = Scalar::new(ring, c.integer()?);
            c.expect("*")?;
            c.expect("e")?;
            c.expect("(")?;
            let idx = c.index(rank)?;
            c.expect(")")?;
            (idx, n)
        };
        let signed = if negate { -coeff } else { coeff };
        v.set_coord(idx, v.coord(idx) + signed);
        c.skip_ws();
        if !c.rest().starts_with(['+', '-']) {
            break;
        }
    }
    Ok(v)
}

fn parse_gen_args(c: &mut Cursor<'_>, rank: usize, ring: RingSpec) -> Result<(Idx, Idx, Scalar)> {
    c.expect("(")?;
    let i = c.index(rank)?;
    c.expect(",")?;
    let j = c.index(rank)?;
    c.expect(";")?;
    let r = Scalar::new(ring, c.integer()?);
    c.expect(")")?;
    Ok((i, j, r))
}

fn parse_sign(c: &mut Cursor<'_>) -> Sign {
    if c.eat("^-1") {
        Sign::Neg
    } else {
        Sign::Pos
    }
}

/// Parses an absolute word: whitespace-separated letters `X(i,j;r)` with
/// optional `^-1`.
pub fn parse_abs_word(rank: usize, ring: RingSpec, text: &str) -> Result<AbsWord> {
    let mut c = Cursor::new(text);
    let w = parse_abs_word_at(&mut c, rank, ring)?;
    if !c.done() {
        return Err(parse_err(c.pos, "trailing input after word"));
    }
    Ok(w)
}

fn parse_abs_word_at(c: &mut Cursor<'_>, rank: usize, ring: RingSpec) -> Result<AbsWord> {
    let mut w = AbsWord::identity(rank, ring);
    loop {
        c.skip_ws();
        if !c.rest().starts_with('X') {
            break;
        }
        c.expect("X")?;
        let (i, j, r) = parse_gen_args(c, rank, ring)?;
        let sign = parse_sign(c);
        let pos = c.pos;
        w.push(
            AbsGen::new(i, j, r).map_err(|e| parse_err(pos, e.to_string()))?,
            sign,
        );
    }
    Ok(w)
}

/// Parses a relative word: atoms `Y(i,j;a)` with optional `^-1`, each
/// optionally preceded by an absolute word and `|>`.
pub fn parse_rel_word(
    rank: usize,
    ring: RingSpec,
    form: &FormIdeal,
    text: &str,
) -> Result<RelWord> {
    let mut c = Cursor::new(text);
    let mut w = RelWord::identity(rank, ring);
    while !c.done() {
        let g = parse_abs_word_at(&mut c, rank, ring)?;
        if !g.is_empty() {
            c.expect("|>")?;
        }
        c.skip_ws();
        let pos = c.pos;
        c.expect("Y")?;
        let (i, j, a) = parse_gen_args(&mut c, rank, ring)?;
        let sign = parse_sign(&mut c);
        let x = RelGen::new(i, j, a, form).map_err(|e| parse_err(pos, e.to_string()))?;
        w.push(RelAtom { g, x, sign });
    }
    Ok(w)
}

/// Parses a van der Kallen generator
/// `(word=<abs-word>, i=<idx>, v=<vector>, a=<scalar>, b=<scalar>)`,
/// optionally followed by `^-1`; a word of such generators is a
/// whitespace-separated sequence.
pub fn parse_vdk_word(
    rank: usize,
    ring: RingSpec,
    form: &FormIdeal,
    text: &str,
) -> Result<VdKWord> {
    let mut c = Cursor::new(text);
    let mut w = VdKWord::identity(rank, ring);
    while !c.done() {
        let pos = c.pos;
        c.expect("(")?;
        c.expect("word=")?;
        let word = parse_abs_word_at(&mut c, rank, ring)?;
        c.expect(",")?;
        c.expect("i=")?;
        let base = c.index(rank)?;
        c.expect(",")?;
        c.expect("v=")?;
        let v = parse_vector_at(&mut c, rank, ring)?;
        c.expect(",")?;
        c.expect("a=")?;
        let a = Scalar::new(ring, c.integer()?);
        c.expect(",")?;
        c.expect("b=")?;
        let b = Scalar::new(ring, c.integer()?);
        c.expect(")")?;
        let sign = parse_sign(&mut c);
        let column = ElemColumn::new(word, base);
        let gen = VdKGen::new(column, v, a, b, form).map_err(|e| parse_err(pos, e.to_string()))?;
        let gen = match sign {
            Sign::Pos => gen,
            Sign::Neg => gen.inverse(),
        };
        w = w.mul(&VdKWord::generator(gen));
    }
    Ok(w)
}
