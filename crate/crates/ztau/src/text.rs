//! Element text format.
//!
//! Grammar (ASCII, `t` or `tau` for the surd symbol):
//!
//! ```text
//! element := sign? ( tau-term | INT ( sign tau-term? )? )
//! tau-term := ( INT '*'? )? ('t' | 'tau')
//! ```
//!
//! accepting `5`, `-t`, `3+4t`, `0-7tau`, `2*t`, `3+4*t`. Canonical output
//! writes `m+n*t`, suppresses zero terms (bare `0` for zero) and omits the
//! `1*` on unit τ-coefficients: `3+4*t`, `1-t`, `-7*t`, `0`.

use crate::error::ParseError;
use crate::ring::RingElement;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    /// Consume `+` or `-` if present, returning the sign.
    fn take_sign(&mut self) -> Option<i8> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn take_integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
    }

    /// Consume the surd symbol `t` or `tau` if present.
    fn take_symbol(&mut self) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(b"tau") {
            self.pos += 3;
            true
        } else if self.bytes[self.pos..].starts_with(b"t") {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.bytes.len() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn parse_element(s: &str) -> Result<RingElement, ParseError> {
    let mut sc = Scanner::new(s);
    let sign1 = BigInt::from(sc.take_sign().unwrap_or(1));

    if sc.take_symbol() {
        // bare `t`, `-t`, `+tau`
        sc.expect_end()?;
        return Ok(RingElement::new(0, sign1));
    }

    let Some(int1) = sc.take_integer() else {
        return Err(sc.error("expected a digit, `t` or `tau`"));
    };

    match sc.peek() {
        None => Ok(RingElement::integer(sign1 * int1)),
        Some(b'*') => {
            // `4*t`: the leading integer was a τ-coefficient
            sc.pos += 1;
            if !sc.take_symbol() {
                return Err(sc.error("expected `t` or `tau` after `*`"));
            }
            sc.expect_end()?;
            Ok(RingElement::new(0, sign1 * int1))
        }
        Some(b't') => {
            // `4t`, `4tau`
            sc.take_symbol();
            sc.expect_end()?;
            Ok(RingElement::new(0, sign1 * int1))
        }
        Some(b'+') | Some(b'-') => {
            let sign2 = BigInt::from(sc.take_sign().expect("peeked sign"));
            let coeff = sc.take_integer();
            if coeff.is_some() && sc.peek() == Some(b'*') {
                sc.pos += 1;
            }
            if !sc.take_symbol() {
                return Err(sc.error("expected `t` or `tau` in the τ-term"));
            }
            sc.expect_end()?;
            let n = sign2 * coeff.unwrap_or_else(BigInt::one);
            Ok(RingElement::new(sign1 * int1, n))
        }
        Some(c) => Err(sc.error(format!("unexpected character {:?}", c as char))),
    }
}

pub(crate) fn format_element(x: &RingElement) -> String {
    let (m, n) = (x.m(), x.n());
    if m.is_zero() && n.is_zero() {
        return "0".to_string();
    }
    let tau_abs = |n: &BigInt| {
        let a = n.abs();
        if a.is_one() {
            "t".to_string()
        } else {
            format!("{a}*t")
        }
    };
    if n.is_zero() {
        m.to_string()
    } else if m.is_zero() {
        let sign = if n.is_negative() { "-" } else { "" };
        format!("{sign}{}", tau_abs(n))
    } else {
        let op = if n.is_negative() { "-" } else { "+" };
        format!("{m}{op}{}", tau_abs(n))
    }
}

impl FromStr for RingElement {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(p("5"), RingElement::new(5, 0));
        assert_eq!(p("-t"), RingElement::new(0, -1));
        assert_eq!(p("3+4t"), RingElement::new(3, 4));
        assert_eq!(p("0-7tau"), RingElement::new(0, -7));
        assert_eq!(p("106+172t"), RingElement::new(106, 172));
        assert_eq!(p("3+4*t"), RingElement::new(3, 4));
        assert_eq!(p("tau"), RingElement::new(0, 1));
        assert_eq!(p("2*t"), RingElement::new(0, 2));
        assert_eq!(p("12tau"), RingElement::new(0, 12));
        assert_eq!(p("-3-t"), RingElement::new(-3, -1));
        assert_eq!(p("+2+t"), RingElement::new(2, 1));
        assert_eq!(p(" 3 + 4 * t "), RingElement::new(3, 4));
        assert_eq!(p("0"), RingElement::zero());
    }

    #[test]
    fn rejected_forms_report_positions() {
        for (text, pos) in [
            ("", 0),
            ("x", 0),
            ("3+", 2),
            ("3+4", 3),
            ("3+4t5", 4),
            ("t+3", 1),
            ("3*", 2),
            ("--t", 1),
            ("3+4*x", 4),
        ] {
            let err = text.parse::<RingElement>().unwrap_err();
            assert_eq!(err.position, pos, "position for {text:?} ({err})");
        }
    }

    #[test]
    fn canonical_formatting() {
        assert_eq!(format_element(&RingElement::new(3, 4)), "3+4*t");
        assert_eq!(format_element(&RingElement::new(0, -1)), "-t");
        assert_eq!(format_element(&RingElement::new(0, -7)), "-7*t");
        assert_eq!(format_element(&RingElement::new(5, 0)), "5");
        assert_eq!(format_element(&RingElement::new(1, -1)), "1-t");
        assert_eq!(format_element(&RingElement::new(-2, 3)), "-2+3*t");
        assert_eq!(format_element(&RingElement::zero()), "0");
    }

    #[test]
    fn format_then_parse_canonicalizes() {
        for s in ["3+4t", "3+4*t", " 3 + 4 tau"] {
            assert_eq!(format_element(&p(s)), "3+4*t");
        }
    }

    proptest! {
        #[test]
        fn parse_inverts_format(m in -1_000_000_000_000i64..=1_000_000_000_000, n in -1_000_000_000_000i64..=1_000_000_000_000) {
            let x = RingElement::new(m, n);
            prop_assert_eq!(p(&format_element(&x)), x);
        }
    }
}
