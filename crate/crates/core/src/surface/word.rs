//! A small language for closed bordisms: `Dt . JP . MI . L^2 . D`.
//!
//! ```text
//! word   := "Dt" sep (factor sep)* "D"
//! factor := gen ("^" uint)?          uint >= 1
//! gen    := "L" | "JP" | "JM" | "MI"  (case-insensitive)
//! sep    := "." | "∘" | whitespace, optionally padded by whitespace
//! ```
//!
//! Factors compose like maps: the rightmost one is applied first.

use std::fmt;

use crate::operators::TubeKind;

use super::spec::SurfaceSpec;

pub const GRAMMAR: &str = "word   := \"Dt\" sep (factor sep)* \"D\"\n\
factor := gen (\"^\" uint)?      (uint >= 1)\n\
gen    := L | JP | JM | MI      (case-insensitive)\n\
sep    := \".\" | \"∘\" | whitespace";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Tube(TubeKind),
    DiscIn,
    DiscOut,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Tube(k) => write!(f, "{k}"),
            Generator::DiscIn => f.write_str("D"),
            Generator::DiscOut => f.write_str("Dt"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Structure,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{} error at position {position}: {message}", match .kind { ParseErrorKind::Syntax => "syntax", ParseErrorKind::Structure => "structural" })]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ParseErrorKind::Syntax, position, message: message.into() }
    }
    fn structure(position: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ParseErrorKind::Structure, position, message: message.into() }
    }
}

/// Tube factors between the two caps, in written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BordismWord {
    pub factors: Vec<(TubeKind, u32)>,
}

impl BordismWord {
    pub fn new(factors: Vec<(TubeKind, u32)>) -> Self {
        BordismWord { factors }
    }

    /// Every tube, exponents expanded, in written order.
    pub fn tubes(&self) -> Vec<TubeKind> {
        self.factors
            .iter()
            .flat_map(|&(k, e)| std::iter::repeat_n(k, e as usize))
            .collect()
    }

    /// A word in canonical order for a spec: `Dt . MI^t . JM^r- . JP^r+ . L^g . D`.
    pub fn for_spec(spec: &SurfaceSpec) -> Self {
        let factors = [
            (TubeKind::MinusId, spec.t),
            (TubeKind::JMinus, spec.r_minus),
            (TubeKind::JPlus, spec.r_plus),
            (TubeKind::GenusL, spec.genus),
        ]
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .collect();
        BordismWord { factors }
    }
}

impl fmt::Display for BordismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Dt")?;
        for (k, e) in &self.factors {
            if *e == 1 {
                write!(f, " . {k}")?;
            } else {
                write!(f, " . {k}^{e}")?;
            }
        }
        f.write_str(" . D")
    }
}

impl std::str::FromStr for BordismWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_word(s)
    }
}

struct Token {
    pos: usize,
    gen: Generator,
    exp: Option<u32>,
    exp_pos: usize,
}

struct Lexer {
    chars: Vec<char>,
    i: usize,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.i;
        while self.peek().is_some_and(char::is_whitespace) {
            self.i += 1;
        }
        self.i > start
    }

    /// Consumes a separator; returns false if none was present.
    fn separator(&mut self) -> Result<bool, ParseError> {
        let mut seen = self.skip_ws();
        if matches!(self.peek(), Some('.') | Some('∘')) {
            self.i += 1;
            seen = true;
            self.skip_ws();
            if let Some(c @ ('.' | '∘')) = self.peek() {
                return Err(ParseError::syntax(self.i, format!("unexpected `{c}`, expected a generator")));
            }
        }
        Ok(seen)
    }

    fn token(&mut self) -> Result<Token, ParseError> {
        let pos = self.i;
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.i += 1;
        }
        if self.i == start {
            return Err(match self.peek() {
                None => ParseError::syntax(pos, "unexpected end of input, expected a generator"),
                Some(c) => ParseError::syntax(pos, format!("unexpected `{c}`, expected a generator")),
            });
        }
        let name: String = self.chars[start..self.i].iter().collect::<String>().to_ascii_lowercase();
        let gen = match name.as_str() {
            "l" => Generator::Tube(TubeKind::GenusL),
            "jp" => Generator::Tube(TubeKind::JPlus),
            "jm" => Generator::Tube(TubeKind::JMinus),
            "mi" => Generator::Tube(TubeKind::MinusId),
            "d" => Generator::DiscIn,
            "dt" => Generator::DiscOut,
            _ => {
                let raw: String = self.chars[start..self.i].iter().collect();
                return Err(ParseError::syntax(pos, format!("unknown generator `{raw}`")));
            }
        };
        let mut exp = None;
        let mut exp_pos = self.i;
        if self.peek() == Some('^') {
            self.i += 1;
            exp_pos = self.i;
            let ds = self.i;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            if self.i == ds {
                return Err(ParseError::syntax(ds, "expected an exponent after `^`"));
            }
            let digits: String = self.chars[ds..self.i].iter().collect();
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::syntax(ds, format!("exponent `{digits}` out of range")))?;
            if e == 0 {
                return Err(ParseError::syntax(ds, "exponent must be at least 1"));
            }
            exp = Some(e);
        }
        Ok(Token { pos, gen, exp, exp_pos })
    }
}

pub fn parse_word(input: &str) -> Result<BordismWord, ParseError> {
    let mut lx = Lexer { chars: input.chars().collect(), i: 0 };
    lx.skip_ws();
    let mut tokens = Vec::new();
    loop {
        tokens.push(lx.token()?);
        let had_sep = lx.separator()?;
        if lx.peek().is_none() {
            let last = lx.chars.iter().rev().find(|c| !c.is_whitespace());
            if matches!(last, Some('.' | '∘')) {
                return Err(ParseError::syntax(lx.i, "unexpected end of input, expected a generator"));
            }
            break;
        }
        if !had_sep {
            return Err(ParseError::syntax(lx.i, "expected a separator (`.`, `∘` or space)"));
        }
    }
    let n = tokens.len();
    for (idx, tok) in tokens.iter().enumerate() {
        let cap = matches!(tok.gen, Generator::DiscIn | Generator::DiscOut);
        if cap && tok.exp.is_some() {
            return Err(ParseError::syntax(tok.exp_pos - 1, format!("`{}` takes no exponent", tok.gen)));
        }
        match (idx, tok.gen) {
            (0, Generator::DiscOut) => {}
            (0, _) => return Err(ParseError::structure(tok.pos, "a word must start with `Dt`")),
            (i, Generator::DiscIn) if i == n - 1 => {}
            (i, _) if i == n - 1 => return Err(ParseError::structure(tok.pos, "a word must end with `D`")),
            (_, Generator::DiscIn | Generator::DiscOut) => {
                return Err(ParseError::structure(tok.pos, format!("`{}` may only appear at the end of a word", tok.gen)))
            }
            _ => {}
        }
    }
    if n < 2 {
        return Err(ParseError::structure(lx.chars.len(), "a word must end with `D`"));
    }
    let factors = tokens[1..n - 1]
        .iter()
        .map(|t| match t.gen {
            Generator::Tube(k) => (k, t.exp.unwrap_or(1)),
            _ => unreachable!(),
        })
        .collect();
    Ok(BordismWord { factors })
}

/// The surface a word closes up to: genus from `L`, punctures from the rest.
pub fn word_to_spec(word: &BordismWord) -> SurfaceSpec {
    let mut spec = SurfaceSpec::default();
    for &(k, e) in &word.factors {
        match k {
            TubeKind::GenusL => spec.genus += e,
            TubeKind::JPlus => spec.r_plus += e,
            TubeKind::JMinus => spec.r_minus += e,
            TubeKind::MinusId => spec.t += e,
        }
    }
    spec
}
