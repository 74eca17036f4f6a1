//! Text syntax for algebras and representations.
//!
//! ```text
//! algebra := factor ("*" factor)*          factor := letter rank
//! rep     := term ("+" term)*              term   := irrep ("*" irrep)*
//! irrep   := triv | std | spin | spin+ | spin- | sym INT | wedge INT
//!          | dual( irrep ) | hw( INT ("," INT)* )
//! ```
//!
//! Whitespace is insignificant and keywords are case-insensitive. A `+`
//! directly after `spin` is the half-spin suffix unless another irrep
//! follows it, in which case it separates terms: `spin+spin` is two terms,
//! `spin+ + spin-` is two half-spins.

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use rectrep::charcalc::{resolve_irrep, IrrepName};
use rectrep::{RepSpec, SemisimpleAlgebra, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at line {line}, column {column}")]
pub struct ParseError {
    pub message: String,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError {
            message: message.into(),
            line,
            column,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// A run of ASCII letters, lowercased.
    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect::<String>().to_ascii_lowercase()
    }

    /// Digits with whitespace allowed between them, as insignificant.
    fn digits(&mut self) -> Option<String> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        (!out.is_empty()).then_some(out)
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let d = self.digits().ok_or_else(|| self.unexpected("a number"))?;
        d.parse()
            .map_err(|_| self.error_at(start, format!("number {d} is too large")))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.eat('-');
        let d = self.digits().ok_or_else(|| self.unexpected("an integer"))?;
        let v: BigInt = d.parse().expect("digits");
        Ok(if negative { -v } else { v })
    }

    /// After `spin`: is the next `+` a suffix rather than a term separator?
    fn plus_is_suffix(&mut self) -> bool {
        if self.peek() != Some('+') {
            return false;
        }
        let save = self.pos;
        self.pos += 1;
        let next = self.peek();
        self.pos = save;
        !next.is_some_and(|c| c.is_ascii_alphabetic())
    }
}

/// Parses `factor ("*" factor)*`.
pub fn parse_algebra(text: &str) -> Result<SemisimpleAlgebra, ParseError> {
    let mut cur = Cursor::new(text);
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let letter = match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                cur.pos += 1;
                c.to_ascii_uppercase()
            }
            _ => return Err(cur.unexpected("a factor such as A1 or B3")),
        };
        let rank = cur.unsigned()?;
        let label = format!("{letter}{rank}");
        let t: SimpleType = label
            .parse()
            .map_err(|e: String| cur.error_at(start, e))?;
        factors.push(t);
        if !cur.eat('*') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.unexpected("'*' or end of input"));
    }
    SemisimpleAlgebra::new(factors).map_err(|e| cur.error_at(0, e.to_string()))
}

fn parse_irrep(cur: &mut Cursor) -> Result<IrrepName, ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let word = cur.word();
    let name = match word.as_str() {
        "triv" => IrrepName::Triv,
        "std" => IrrepName::Std,
        "spin" => {
            if cur.peek() == Some('-') {
                cur.pos += 1;
                IrrepName::SpinMinus
            } else if cur.plus_is_suffix() {
                cur.expect('+')?;
                IrrepName::SpinPlus
            } else {
                IrrepName::Spin
            }
        }
        "sym" => IrrepName::Sym(cur.unsigned()?),
        "wedge" => IrrepName::Wedge(cur.unsigned()?),
        "dual" => {
            cur.expect('(')?;
            let inner = parse_irrep(cur)?;
            cur.expect(')')?;
            IrrepName::Dual(Box::new(inner))
        }
        "hw" => {
            cur.expect('(')?;
            let mut coords = vec![cur.integer()?];
            while cur.eat(',') {
                coords.push(cur.integer()?);
            }
            cur.expect(')')?;
            IrrepName::Hw(coords)
        }
        "" => return Err(cur.unexpected("an irreducible name")),
        other => {
            return Err(cur.error_at(start, format!("unknown irreducible name '{other}'")));
        }
    };
    Ok(name)
}

/// One parsed term: an irreducible name per factor, with the position of
/// each for error reporting.
type Term = Vec<(IrrepName, usize)>;

fn parse_terms(cur: &mut Cursor) -> Result<Vec<Term>, ParseError> {
    let mut terms = Vec::new();
    loop {
        let mut term = Vec::new();
        loop {
            cur.skip_ws();
            let at = cur.pos;
            term.push((parse_irrep(cur)?, at));
            if !cur.eat('*') {
                break;
            }
        }
        terms.push(term);
        if !cur.eat('+') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.unexpected("'*', '+' or end of input"));
    }
    Ok(terms)
}

/// Parses a representation of `algebra`, resolving names against each
/// factor's canonical type.
pub fn parse_rep(algebra: &SemisimpleAlgebra, text: &str) -> Result<RepSpec, ParseError> {
    let mut cur = Cursor::new(text);
    let terms = parse_terms(&mut cur)?;
    let k = algebra.num_factors();
    let mut weights: Vec<Weight> = Vec::new();
    for term in &terms {
        if term.len() != k {
            let at = term[0].1;
            return Err(cur.error_at(
                at,
                format!("term has {} irreducibles but the algebra has {k} factors", term.len()),
            ));
        }
        // Names like spin on D_m resolve to several weights; a term is the
        // tensor product of its factors' choices.
        let mut acc: Vec<Weight> = vec![Weight::from_i64s(&[])];
        for ((name, at), t) in term.iter().zip(algebra.factors()) {
            let options = resolve_irrep(*t, name).map_err(|e| cur.error_at(*at, e.to_string()))?;
            acc = acc
                .iter()
                .flat_map(|prefix| options.iter().map(move |w| prefix.concat(w)))
                .collect();
        }
        weights.extend(acc);
    }
    RepSpec::from_weights(algebra.clone(), weights).map_err(|e| cur.error_at(0, e.to_string()))
}

/// Parses both texts; errors from the representation text carry positions
/// in that text.
pub fn parse_spec(algebra: &str, rep: &str) -> Result<(SemisimpleAlgebra, RepSpec), SpecError> {
    let alg = parse_algebra(algebra).map_err(SpecError::Algebra)?;
    let spec = parse_rep(&alg, rep).map_err(SpecError::Rep)?;
    Ok((alg, spec))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("in algebra: {0}")]
    Algebra(ParseError),
    #[error("in representation: {0}")]
    Rep(ParseError),
}

impl SpecError {
    pub fn position(&self) -> &ParseError {
        match self {
            SpecError::Algebra(e) | SpecError::Rep(e) => e,
        }
    }

    pub fn field(&self) -> &'static str {
        match self {
            SpecError::Algebra(_) => "algebra",
            SpecError::Rep(_) => "rep",
        }
    }
}

/// Canonical text for a representation: one term per constituent (repeated
/// by multiplicity), each factor named by its preferred alias.
pub fn render_rep(spec: &RepSpec) -> String {
    let algebra = spec.algebra();
    let mut terms = Vec::new();
    for (hw, m) in spec.summands() {
        let names: Vec<String> = algebra
            .factors()
            .iter()
            .enumerate()
            .map(|(i, t)| rectrep::charcalc::name_irrep(*t, &hw.block(algebra.block(i))).to_string())
            .collect();
        let term = names.join("*");
        let mut count = BigUint::from(1u32);
        while &count <= m {
            terms.push(term.clone());
            count += 1u32;
        }
    }
    terms.join(" + ")
}

pub fn render_algebra(algebra: &SemisimpleAlgebra) -> String {
    algebra.to_string()
}
