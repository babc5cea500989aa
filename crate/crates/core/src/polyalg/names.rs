use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coeff, Monomial, MonomialOrder, PolyError, Polynomial};

/// Variable names bound to slots, plus the textual polynomial syntax:
/// integer or `a/b` coefficients, `*` products (optional), `^` powers,
/// e.g. `x1^12 - x2^5` or `3/2*x1*y2^3 + 7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    pub fn new(names: Vec<String>) -> Result<Self, PolyError> {
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || names[..i].contains(n) {
                return Err(PolyError::Parse(format!("bad variable name `{n}`")));
            }
        }
        Ok(VarNames { names })
    }

    /// `x1, …, xk`.
    pub fn curve(k: usize) -> Self {
        VarNames {
            names: (1..=k).map(|i| format!("x{i}")).collect(),
        }
    }

    /// `x1, …, xl, y1, …, yk`.
    pub fn glued(l: usize, k: usize) -> Self {
        VarNames {
            names: (1..=l)
                .map(|i| format!("x{i}"))
                .chain((1..=k).map(|i| format!("y{i}")))
                .collect(),
        }
    }

    pub(crate) fn generic(n: usize) -> Self {
        Self::curve(n)
    }

    /// Collects the identifiers used in `texts`, sorted by prefix then index.
    pub fn infer<S: AsRef<str>>(texts: &[S]) -> Result<Self, PolyError> {
        let mut found: Vec<String> = Vec::new();
        for t in texts {
            for tok in tokenize(t.as_ref())? {
                if let Token::Ident(name) = tok {
                    if !found.contains(&name) {
                        found.push(name);
                    }
                }
            }
        }
        found.sort_by_key(|n| {
            let split = n.find(|c: char| c.is_ascii_digit()).unwrap_or(n.len());
            let (prefix, digits) = n.split_at(split);
            (
                prefix.to_string(),
                digits.parse::<u64>().unwrap_or(0),
                n.clone(),
            )
        });
        Self::new(found)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses a priority list such as `x2,y2,y1,x1` (highest first).
    pub fn parse_priority(&self, s: &str) -> Result<Vec<usize>, PolyError> {
        let prio = s
            .split(|c: char| c == ',' || c == '>' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                self.index_of(t)
                    .ok_or_else(|| PolyError::UnknownVariable(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MonomialOrder::new(super::OrderKind::DegRevLex, prio.clone())?;
        Ok(prio)
    }

    pub fn format_priority(&self, priority: &[usize]) -> String {
        priority
            .iter()
            .map(|&v| self.names[v].as_str())
            .collect::<Vec<_>>()
            .join(" > ")
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => self.names[i].clone(),
                _ => format!("{}^{}", self.names[i], e),
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&self.format_monomial(m));
            }
        }
        out
    }

    pub fn parse(&self, s: &str, order: &MonomialOrder) -> Result<Polynomial, PolyError> {
        if order.nvars() != self.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.len(),
                found: order.nvars(),
            });
        }
        let toks = tokenize(s)?;
        let mut pos = 0;
        let mut terms = Vec::new();
        if toks.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        let mut first = true;
        while pos < toks.len() {
            let mut sign = 1i64;
            match toks[pos] {
                Token::Plus => pos += 1,
                Token::Minus => {
                    sign = -1;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(PolyError::Parse(format!("expected + or - in `{s}`"))),
            }
            first = false;
            let (m, c) = self.parse_term(&toks, &mut pos, s)?;
            terms.push((m, c * Coeff::from_integer(BigInt::from(sign))));
        }
        Ok(Polynomial::from_terms(terms, order))
    }

    fn parse_term(
        &self,
        toks: &[Token],
        pos: &mut usize,
        src: &str,
    ) -> Result<(Monomial, Coeff), PolyError> {
        let mut m = Monomial::one(self.len());
        let mut c = Coeff::one();
        let mut factors = 0;
        loop {
            match toks.get(*pos) {
                Some(Token::Number(n)) => {
                    *pos += 1;
                    let mut v = Coeff::from_integer(n.clone());
                    if let Some(Token::Slash) = toks.get(*pos) {
                        *pos += 1;
                        match toks.get(*pos) {
                            Some(Token::Number(d)) if !d.is_zero() => {
                                *pos += 1;
                                v /= Coeff::from_integer(d.clone());
                            }
                            _ => return Err(PolyError::Parse(format!("bad fraction in `{src}`"))),
                        }
                    }
                    c *= v;
                }
                Some(Token::Ident(name)) => {
                    *pos += 1;
                    let slot = self
                        .index_of(name)
                        .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    let mut e = 1u32;
                    if let Some(Token::Caret) = toks.get(*pos) {
                        *pos += 1;
                        match toks.get(*pos) {
                            Some(Token::Number(n)) => {
                                *pos += 1;
                                e = u32::try_from(n).map_err(|_| {
                                    PolyError::Parse(format!("exponent too large in `{src}`"))
                                })?;
                            }
                            _ => {
                                return Err(PolyError::Parse(format!(
                                    "missing exponent in `{src}`"
                                )))
                            }
                        }
                    }
                    m = &m * &Monomial::var_power(self.len(), slot, e);
                }
                _ => break,
            }
            factors += 1;
            if let Some(Token::Star) = toks.get(*pos) {
                *pos += 1;
                if !matches!(
                    toks.get(*pos),
                    Some(Token::Number(_)) | Some(Token::Ident(_))
                ) {
                    return Err(PolyError::Parse(format!("dangling `*` in `{src}`")));
                }
            }
        }
        if factors == 0 {
            return Err(PolyError::Parse(format!("expected a term in `{src}`")));
        }
        Ok((m, c))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Token>, PolyError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token::Number(text.parse().unwrap()));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(PolyError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::coeff;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format() {
        let v = VarNames::glued(2, 2);
        let ord = MonomialOrder::degrevlex(4);
        let p = v.parse("x1^12 - x2^5", &ord).unwrap();
        assert_eq!(v.format(&p), "x1^12 - x2^5");
        let q = v.parse("2x1 y1 - 3/4*y2^2 + 7 - 7", &ord).unwrap();
        assert_eq!(v.format(&q), "2*x1*y1 - 3/4*y2^2");
        assert_eq!(v.format(&v.parse("-1", &ord).unwrap()), "-1");
        assert_eq!(v.format(&v.parse("x1 - x1", &ord).unwrap()), "0");
    }

    #[test]
    fn parse_errors() {
        let v = VarNames::curve(2);
        let ord = MonomialOrder::degrevlex(2);
        assert!(matches!(
            v.parse("x3", &ord),
            Err(PolyError::UnknownVariable(_))
        ));
        assert!(v.parse("x1^", &ord).is_err());
        assert!(v.parse("x1 +", &ord).is_err());
        assert!(v.parse("x1 x2 $", &ord).is_err());
        assert!(v.parse("", &ord).is_err());
        assert!(v.parse("1/0", &ord).is_err());
    }

    #[test]
    fn infer_and_priority() {
        let v = VarNames::infer(&["y2 - x10", "x2*y1 + x1"]).unwrap();
        assert_eq!(v.names(), &["x1", "x2", "x10", "y1", "y2"]);
        let g = VarNames::glued(2, 2);
        assert_eq!(g.parse_priority("x2,y2,y1,x1").unwrap(), vec![1, 3, 2, 0]);
        assert_eq!(
            g.parse_priority("x2 > y2 > y1 > x1").unwrap(),
            vec![1, 3, 2, 0]
        );
        assert!(g.parse_priority("x2,y2,y1").is_err());
        assert!(g.parse_priority("x2,y2,y1,z").is_err());
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(
            terms in prop::collection::vec((prop::collection::vec(0u32..5, 3), -9i64..=9, 1i64..4), 0..6)
        ) {
            let v = VarNames::curve(3);
            let ord = MonomialOrder::negdegrevlex(3);
            let p = Polynomial::from_terms(
                terms.into_iter().map(|(e, n, d)| (Monomial::new(&e), coeff(n) / coeff(d))),
                &ord,
            );
            let text = v.format(&p);
            prop_assert_eq!(v.parse(&text, &ord).unwrap(), p);
        }
    }
}
