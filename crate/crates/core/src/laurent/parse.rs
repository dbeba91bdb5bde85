use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::exponent::{fmt_half, parse_half};
use super::{ExponentVector, LaurentPoly, PolyError};

fn render_monomial(e: &ExponentVector, names: &[&str]) -> String {
    let mut parts = Vec::new();
    for (i, &d) in e.doubled().iter().enumerate() {
        match d {
            0 => {}
            2 => parts.push(names[i].to_string()),
            _ => parts.push(format!("{}^{{{}}}", names[i], fmt_half(d))),
        }
    }
    parts.join(" ")
}

/// Renders terms in descending lexicographic order of encoded exponents.
pub(super) fn render(p: &LaurentPoly, names: &[&str]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let mono = render_monomial(e, names);
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{} * {}", abs, mono));
        }
    }
    out
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn error(&self, reason: impl Into<String>) -> PolyError {
        PolyError::Parse {
            input: self.src.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }
}

fn parse_exponent(cur: &mut Cursor) -> Result<i64, PolyError> {
    cur.skip_ws();
    let braced = if cur.eat('{') {
        Some('}')
    } else if cur.eat('(') {
        Some(')')
    } else {
        None
    };
    let text = match braced {
        Some(close) => {
            let t = cur.take_while(|c| c != close);
            if !cur.eat(close) {
                return Err(cur.error("unterminated exponent"));
            }
            t
        }
        None => {
            cur.skip_ws();
            let start = cur.pos;
            cur.eat('-');
            cur.take_while(|c| c.is_ascii_digit());
            &cur.src[start..cur.pos]
        }
    };
    parse_half(text).map_err(|_| cur.error(format!("bad exponent {:?}", text)))
}

/// Parses a sum of signed monomials such as `-2 * t1^{1/2} t2^{-1} + 3`.
pub(super) fn parse_with_names(s: &str, names: &[&str]) -> Result<LaurentPoly, PolyError> {
    let nvars = names.len();
    let mut by_len: Vec<(usize, &str)> = names.iter().copied().enumerate().collect();
    by_len.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));

    let mut cur = Cursor { src: s, pos: 0 };
    let mut poly = LaurentPoly::zero(nvars);
    cur.skip_ws();
    if cur.rest().is_empty() {
        return Err(cur.error("empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.rest().is_empty() {
            break;
        }
        let mut sign = BigInt::one();
        if cur.eat('-') {
            sign = -sign;
        } else if !cur.eat('+') && !first {
            return Err(cur.error("expected '+' or '-'"));
        }
        first = false;
        cur.skip_ws();
        let digits = cur.take_while(|c| c.is_ascii_digit());
        let mut coeff = if digits.is_empty() {
            BigInt::one()
        } else {
            digits.parse::<BigInt>().map_err(|_| cur.error("bad coefficient"))?
        };
        let mut exp = ExponentVector::zeros(nvars);
        let mut saw_factor = !digits.is_empty();
        loop {
            cur.skip_ws();
            let had_star = cur.eat('*');
            cur.skip_ws();
            let rest = cur.rest();
            let hit = by_len.iter().find(|(_, name)| {
                rest.starts_with(name)
                    && !rest[name.len()..]
                        .chars()
                        .next()
                        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
            });
            match hit {
                Some(&(idx, name)) => {
                    cur.pos += name.len();
                    cur.skip_ws();
                    let d = if cur.eat('^') { parse_exponent(&mut cur)? } else { 2 };
                    exp.set(idx, exp.get(idx) + d);
                    saw_factor = true;
                }
                None => {
                    if had_star {
                        let more = cur.take_while(|c| c.is_ascii_digit());
                        if more.is_empty() {
                            return Err(cur.error("expected a variable after '*'"));
                        }
                        coeff *= more.parse::<BigInt>().map_err(|_| cur.error("bad coefficient"))?;
                        saw_factor = true;
                        continue;
                    }
                    break;
                }
            }
        }
        if !saw_factor {
            return Err(cur.error("expected a coefficient or variable"));
        }
        cur.skip_ws();
        if let Some(c) = cur.peek() {
            if c != '+' && c != '-' {
                return Err(cur.error(format!("unexpected character {:?}", c)));
            }
        }
        let c = sign * coeff;
        if !c.is_zero() {
            poly = &poly + &LaurentPoly::monomial(exp, c);
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_canonical() {
        let p = LaurentPoly::parse("-t1^{1/2} t2^{1/2} + t1^{1/2}t2^{-1/2} + t1^{-1/2} t2^{1/2} - t1^{-1/2} t2^{-1/2}", 2)
            .unwrap();
        assert_eq!(
            p.to_string(),
            "-t1^{1/2} t2^{1/2} + t1^{1/2} t2^{-1/2} + t1^{-1/2} t2^{1/2} - t1^{-1/2} t2^{-1/2}"
        );
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(LaurentPoly::parse("3*t^2 - 2", 1).unwrap().to_string(), "3 * t1^{2} - 2");
    }

    #[test]
    fn parse_variants() {
        let a = LaurentPoly::parse("t1^-1 + 2 * t2^(3/2)", 2).unwrap();
        let b = LaurentPoly::parse("t1^{-1}+2t2^{3/2}", 2).unwrap();
        assert_eq!(a, b);
        let c = LaurentPoly::parse("t - 1 + t^{-1}", 1).unwrap();
        assert_eq!(c.num_terms(), 3);
        let d = LaurentPoly::parse_with_names("x - y^2", &["x", "y"]).unwrap();
        assert_eq!(d.to_string_with_names(&["x", "y"]), "x - y^{2}");
        assert_eq!(LaurentPoly::parse("t1 - t1", 1).unwrap(), LaurentPoly::zero(1));
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("", 1).is_err());
        assert!(LaurentPoly::parse("t3", 2).is_err());
        assert!(LaurentPoly::parse("t1^{1/3}", 1).is_err());
        assert!(LaurentPoly::parse("t1 t2 )", 2).is_err());
    }

    #[test]
    fn roundtrip_display() {
        let s = "5 * t1^{3/2} t2^{-1} - t1 + 7";
        let p = LaurentPoly::parse(s, 2).unwrap();
        assert_eq!(LaurentPoly::parse(&p.to_string(), 2).unwrap(), p);
    }
}
