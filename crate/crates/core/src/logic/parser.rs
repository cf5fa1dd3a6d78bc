//! Recursive-descent parser for the surface syntax:
//!
//! ```text
//! formula := impl ; impl := or ("->" impl)? ; or := and ("|" and)* ;
//! and := unary ("&" unary)* ;
//! unary := "~" unary | "K" unary | "B" unary | "B(" formula "|" cond ")"
//!        | "[" boxarg "]" unary | atom ;
//! boxarg := obslist | formula ; cond := obslist | formula ;
//! obslist := OUTCOME ("," OUTCOME)* ;
//! atom := "T" | lin | "(" formula ")" ; lin := linsum REL rat ;
//! REL := ">=" | "<=" | "=" | ">" | "<" ;
//! linsum := term (("+"|"-") term)* ; term := (rat "*")? "w(" OUTCOME ")" ;
//! rat := INT ("/" INT)? .
//! ```
//!
//! Extensions accepted on top of the grammar: a leading sign on a sum,
//! constant terms and `w(..)` terms on either side of a comparison, and
//! decimal literals such as `0.55`. Inside `B(...)` a top-level `|` always
//! separates body from condition, so a disjunctive body needs parentheses.
//! In `B(.. | cond)` and `[..]`, a comma-separated list of bare outcome
//! names is read as observations; anything else is a formula.

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};
use thiserror::Error;

use super::ast::{Formula, LinIneq};
use crate::simplex::{OutcomeAlphabet, Rational};

/// The surface grammar, in EBNF.
pub const GRAMMAR: &str = r#"formula := impl ; impl := or ("->" impl)? ; or := and ("|" and)* ; and := unary ("&" unary)* ;
unary := "~" unary | "K" unary | "B" unary | "B(" formula "|" cond ")" | "[" boxarg "]" unary | atom ;
boxarg := obslist | formula ; cond := obslist | formula ; obslist := OUTCOME ("," OUTCOME)* ;
atom := "T" | lin | "(" formula ")" ; lin := linsum REL rat ; REL := ">=" | "<=" | "=" | ">" | "<" ;
linsum := term (("+"|"-") term)* ; term := (rat "*")? "w(" OUTCOME ")" ; rat := INT ("/" INT)? ."#;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at byte {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("unknown outcome `{name}` at byte {position}")]
    UnknownOutcome { position: usize, name: String },
    #[error("numeric literal out of range at byte {position}")]
    NumberOutOfRange { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(&'static str),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{}`", s),
            Tok::Num(s) => format!("number `{}`", s),
            Tok::Sym(s) => format!("`{}`", s),
            Tok::End => "end of input".to_string(),
        }
    }
}

const SYMBOLS: &[&str] = &[
    "->", ">=", "<=", "(", ")", "[", "]", ",", "|", "&", "~", "=", ">", "<", "+", "-", "*", "/",
];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((Tok::Num(text[start..i].to_string()), start));
            continue;
        }
        for sym in SYMBOLS {
            if text[i..].starts_with(sym) {
                out.push((Tok::Sym(sym), i));
                i += sym.len();
                continue 'outer;
            }
        }
        let ch = text[i..].chars().next().unwrap_or('?');
        return Err(ParseError::Syntax {
            position: i,
            expected: vec!["a formula token".into()],
            found: format!("`{}`", ch),
        });
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// A linear sum: outcome terms plus a constant.
#[derive(Default)]
struct LinSum {
    terms: Vec<(Rational, String)>,
    constant: Rational,
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    alphabet: &'a OutcomeAlphabet,
}

type PResult<T> = Result<T, ParseError>;

/// Parses `text` against `alphabet`.
pub fn parse(text: &str, alphabet: &OutcomeAlphabet) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        alphabet,
    };
    let f = p.formula(false)?;
    p.expect_end()?;
    Ok(f)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn position(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError::Syntax {
            position: self.position(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, s: &str) -> PResult<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.error(&[&format!("`{}`", s)])
        }
    }

    fn expect_end(&self) -> PResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error(&["end of input", "`&`", "`|`", "`->`"])
        }
    }

    /// With `no_bar` set, a top-level `|` is left for the caller.
    fn formula(&mut self, no_bar: bool) -> PResult<Formula> {
        let lhs = self.disjunction(no_bar)?;
        if self.eat("->") {
            let rhs = self.formula(no_bar)?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self, no_bar: bool) -> PResult<Formula> {
        let mut lhs = self.conjunction()?;
        while !no_bar && self.eat("|") {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while self.eat("&") {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        if self.eat("~") {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat("[") {
            return match self.observation_list("]")? {
                Some(obs) => {
                    self.expect("]")?;
                    Ok(Formula::DynObs(obs, Box::new(self.unary()?)))
                }
                None => {
                    let theta = self.formula(false)?;
                    self.expect("]")?;
                    Ok(Formula::after_learning(theta, self.unary()?))
                }
            };
        }
        match self.peek().clone() {
            Tok::Ident(name) if name == "K" => {
                self.bump();
                Ok(Formula::know(self.unary()?))
            }
            Tok::Ident(name) if name == "B" => {
                self.bump();
                if self.eat("(") {
                    self.belief_body()
                } else {
                    Ok(Formula::believe(self.unary()?))
                }
            }
            _ => self.atom(),
        }
    }

    // after `B(`
    fn belief_body(&mut self) -> PResult<Formula> {
        let body = self.formula(true)?;
        if self.eat(")") {
            return Ok(Formula::believe(body));
        }
        if !self.eat("|") {
            return self.error(&["`|`", "`)`"]);
        }
        let result = match self.observation_list(")")? {
            Some(obs) => Formula::BelObs(Box::new(body), obs),
            None => Formula::believe_given(body, self.formula(false)?),
        };
        self.expect(")")?;
        Ok(result)
    }

    /// Recognises `OUTCOME ("," OUTCOME)*` immediately followed by `close`.
    /// Returns `None` (consuming nothing) if the upcoming tokens are a formula.
    fn observation_list(&mut self, close: &str) -> PResult<Option<Vec<String>>> {
        let mut names = Vec::new();
        let mut k = 0;
        loop {
            match self.peek_at(k) {
                Tok::Ident(n) => names.push((n.clone(), self.toks[self.pos + k].1)),
                _ => return Ok(None),
            }
            k += 1;
            match self.peek_at(k) {
                Tok::Sym(",") => k += 1,
                Tok::Sym(s) if *s == close => break,
                _ => return Ok(None),
            }
        }
        let all_known = names.iter().all(|(n, _)| self.alphabet.contains(n));
        if !all_known {
            // a lone `T` that is not an outcome is the formula "true"
            if names.len() == 1 && names[0].0 == "T" {
                return Ok(None);
            }
            let (name, position) = names
                .into_iter()
                .find(|(n, _)| !self.alphabet.contains(n))
                .expect("some name is unknown");
            return Err(ParseError::UnknownOutcome { position, name });
        }
        for _ in 0..k {
            self.bump();
        }
        Ok(Some(names.into_iter().map(|(n, _)| n).collect()))
    }

    fn atom(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "T" => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Sym("(") => {
                self.bump();
                let f = self.formula(false)?;
                self.expect(")")?;
                Ok(f)
            }
            Tok::Num(_) | Tok::Sym("-") | Tok::Sym("+") => self.comparison(),
            Tok::Ident(name) if name == "w" => self.comparison(),
            _ => self.error(&["`~`", "`K`", "`B`", "`[`", "`(`", "`T`", "`w(`", "number"]),
        }
    }

    fn comparison(&mut self) -> PResult<Formula> {
        let start = self.position();
        let lhs = self.linsum()?;
        let rel = match self.peek() {
            Tok::Sym(s @ (">=" | "<=" | "=" | ">" | "<")) => *s,
            _ => return self.error(&["`>=`", "`<=`", "`=`", "`>`", "`<`"]),
        };
        self.bump();
        let rhs = self.linsum()?;
        let overflow = || ParseError::NumberOutOfRange { position: start };

        // ge: lhs - rhs >= 0 written as terms >= bound
        let mut ge_terms = lhs.terms.clone();
        for (a, o) in &rhs.terms {
            ge_terms.push((checked_neg(a).ok_or_else(overflow)?, o.clone()));
        }
        let ge_bound = rhs.constant.checked_sub(&lhs.constant).ok_or_else(overflow)?;
        let ge = LinIneq {
            terms: ge_terms,
            bound: ge_bound,
        };
        let le = || -> PResult<LinIneq> {
            let mut terms = Vec::new();
            for (a, o) in &lhs.terms {
                terms.push((checked_neg(a).ok_or_else(overflow)?, o.clone()));
            }
            terms.extend(rhs.terms.iter().cloned());
            Ok(LinIneq {
                terms,
                bound: lhs.constant.checked_sub(&rhs.constant).ok_or_else(overflow)?,
            })
        };
        Ok(match rel {
            ">=" => Formula::Lin(ge),
            "<=" => Formula::Lin(le()?),
            "=" => Formula::and(Formula::Lin(ge), Formula::Lin(le()?)),
            ">" => Formula::not(Formula::Lin(le()?)),
            "<" => Formula::not(Formula::Lin(ge)),
            _ => unreachable!(),
        })
    }

    fn linsum(&mut self) -> PResult<LinSum> {
        let mut sum = LinSum::default();
        let mut negative = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        loop {
            let position = self.position();
            let (coeff, outcome) = self.term()?;
            let coeff = if negative {
                checked_neg(&coeff)
                    .ok_or(ParseError::NumberOutOfRange { position })?
            } else {
                coeff
            };
            match outcome {
                Some(o) => sum.terms.push((coeff, o)),
                None => {
                    sum.constant = sum
                        .constant
                        .checked_add(&coeff)
                        .ok_or(ParseError::NumberOutOfRange { position })?
                }
            }
            if self.eat("+") {
                negative = false;
            } else if self.eat("-") {
                negative = true;
            } else {
                return Ok(sum);
            }
        }
    }

    /// `rat`, `rat * w(o)` or `w(o)`.
    fn term(&mut self) -> PResult<(Rational, Option<String>)> {
        if let Tok::Num(_) = self.peek() {
            let r = self.rational()?;
            if self.eat("*") {
                let o = self.weight_ref()?;
                return Ok((r, Some(o)));
            }
            return Ok((r, None));
        }
        let o = self.weight_ref()?;
        Ok((Rational::from_integer(1), Some(o)))
    }

    fn weight_ref(&mut self) -> PResult<String> {
        match self.peek() {
            Tok::Ident(w) if w == "w" => {
                self.bump();
            }
            _ => return self.error(&["`w(`", "number"]),
        }
        self.expect("(")?;
        let position = self.position();
        let name = match self.bump() {
            Tok::Ident(n) => n,
            _ => {
                self.pos -= 1;
                return self.error(&["outcome name"]);
            }
        };
        if !self.alphabet.contains(&name) {
            return Err(ParseError::UnknownOutcome { position, name });
        }
        self.expect(")")?;
        Ok(name)
    }

    fn rational(&mut self) -> PResult<Rational> {
        let position = self.position();
        let num = match self.bump() {
            Tok::Num(s) => decimal(&s).ok_or(ParseError::NumberOutOfRange { position })?,
            _ => {
                self.pos -= 1;
                return self.error(&["number"]);
            }
        };
        if self.eat("/") {
            let dpos = self.position();
            let den = match self.bump() {
                Tok::Num(s) => decimal(&s).ok_or(ParseError::NumberOutOfRange { position: dpos })?,
                _ => {
                    self.pos -= 1;
                    return self.error(&["number"]);
                }
            };
            if den.is_zero() {
                return Err(ParseError::NumberOutOfRange { position: dpos });
            }
            return num
                .checked_mul(&den.recip())
                .ok_or(ParseError::NumberOutOfRange { position });
        }
        Ok(num)
    }
}

fn checked_neg(r: &Rational) -> Option<Rational> {
    r.numer()
        .checked_neg()
        .map(|n| Rational::new_raw(n, *r.denom()))
}

/// Exact value of an unsigned decimal literal like `12` or `0.55`.
fn decimal(s: &str) -> Option<Rational> {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    let digits = format!("{}{}", int, frac);
    let numer: i64 = digits.parse().ok()?;
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    Some(Rational::new(numer, denom))
}
