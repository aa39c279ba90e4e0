use std::collections::BTreeMap;
use std::fmt;

use cubiclines::poly::{MPoly, Monomial, Rational, Var};
use cubiclines::{CubicSystem, Error};
use serde::{Deserialize, Serialize};

/// Monomial keys with their (x, y) exponents.
pub const KEYS: [(&str, u32, u32); 10] = [
    ("1", 0, 0),
    ("x", 1, 0),
    ("y", 0, 1),
    ("x^2", 2, 0),
    ("xy", 1, 1),
    ("y^2", 0, 2),
    ("x^3", 3, 0),
    ("x^2y", 2, 1),
    ("xy^2", 1, 2),
    ("y^3", 0, 3),
];

/// `{"p": {...}, "q": {...}}`, coefficients as exact rational strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub p: BTreeMap<String, String>,
    pub q: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    Json(String),
    UnknownKey { poly: char, key: String },
    BadValue { poly: char, key: String, value: String },
    NotCubic,
    Invalid(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Json(e) => write!(f, "malformed input: {e}"),
            InputError::UnknownKey { poly, key } => {
                let allowed: Vec<&str> = KEYS.iter().map(|k| k.0).collect();
                write!(f, "{poly}: unknown monomial key \"{key}\" (allowed: {})", allowed.join(", "))
            }
            InputError::BadValue { poly, key, value } => {
                write!(f, "{poly}.{key}: \"{value}\" is not an exact rational (use forms like \"-3\" or \"5/7\")")
            }
            InputError::NotCubic => write!(f, "not a cubic system: every cubic coefficient of p and q is zero"),
            InputError::Invalid(e) => write!(f, "invalid system: {e}"),
        }
    }
}

impl std::error::Error for InputError {}

/// Strict rational syntax: optional sign, digits, optional "/digits" with a nonzero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return None;
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))
    }

    fn poly(map: &BTreeMap<String, String>, name: char) -> Result<MPoly, InputError> {
        let mut f = MPoly::zero();
        for (key, value) in map {
            let Some(&(_, i, j)) = KEYS.iter().find(|k| k.0 == key) else {
                return Err(InputError::UnknownKey { poly: name, key: key.clone() });
            };
            let c = parse_rational(value)
                .ok_or_else(|| InputError::BadValue { poly: name, key: key.clone(), value: value.clone() })?;
            f.add_term(Monomial::var(Var::X, i).mul(&Monomial::var(Var::Y, j)), c);
        }
        Ok(f)
    }

    pub fn to_system(&self) -> Result<CubicSystem, InputError> {
        let (p, q) = (Self::poly(&self.p, 'p')?, Self::poly(&self.q, 'q')?);
        CubicSystem::new(p, q).map_err(|e| match e {
            Error::NotCubic => InputError::NotCubic,
            other => InputError::Invalid(other.to_string()),
        })
    }

    /// Canonical document of a system: nonzero coefficients only, reduced fractions.
    pub fn from_system(s: &CubicSystem) -> Self {
        let map = |f: &MPoly| {
            KEYS.iter()
                .filter_map(|&(key, i, j)| {
                    let c = f.coeff(&Monomial::var(Var::X, i).mul(&Monomial::var(Var::Y, j)));
                    (!num_traits::Zero::is_zero(&c)).then(|| (key.to_string(), c.to_string()))
                })
                .collect()
        };
        InputDocument { p: map(s.p()), q: map(s.q()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_strict() {
        assert_eq!(parse_rational("-3"), Some(Rational::from_integer((-3).into())));
        assert_eq!(parse_rational("10/4"), Some(Rational::new(5.into(), 2.into())));
        for bad in ["1.5", "1e3", "", "/2", "3/", "3/0", "--1", "0x10", " 1"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn system_one_parses() {
        let d = InputDocument::from_json(r#"{"p":{"x":"-1","x^3":"1"},"q":{"y":"-1","y^3":"1"}}"#).unwrap();
        let s = d.to_system().unwrap();
        assert_eq!(s, CubicSystem::parse("x^3 - x", "y^3 - y").unwrap());
        assert_eq!(InputDocument::from_system(&s), d);
    }

    #[test]
    fn rejections() {
        assert_eq!(InputDocument::from_json(r#"{"p":{},"q":{}}"#).unwrap().to_system(), Err(InputError::NotCubic));
        assert!(matches!(InputDocument::from_json(r#"{"p":{"x":1.5},"q":{}}"#), Err(InputError::Json(_))));
        assert!(matches!(
            InputDocument::from_json(r#"{"p":{"x":"1.5"},"q":{"y^3":"1"}}"#).unwrap().to_system(),
            Err(InputError::BadValue { .. })
        ));
        assert!(matches!(
            InputDocument::from_json(r#"{"p":{"x^4":"1"},"q":{"y^3":"1"}}"#).unwrap().to_system(),
            Err(InputError::UnknownKey { .. })
        ));
        assert!(matches!(InputDocument::from_json(r#"{"p":{},"q":{},"r":{}}"#), Err(InputError::Json(_))));
    }
}
