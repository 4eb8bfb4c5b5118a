//! Parser for group-spec expressions such as `wr(dih(10), 3)` or
//! `cprod(q8(), q8(), phi=center)`. The canonical printer is the `Display`
//! impl on [`GroupSpec`]; parsing its output gives back an equal value.

use std::fmt;

use comgraph_core::{GroupSpec, Phi, StandardGroup};

#[derive(Debug, Clone, PartialEq)]
pub enum SpecError {
    /// Malformed text; `pos` is a byte offset into the input.
    Parse { pos: usize, message: String },
    /// Well-formed but rejected by the constructions (bad prime, degree, ...).
    Semantic(comgraph_core::Error),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Parse { pos, message } => write!(f, "parse error at {pos}: {message}"),
            SpecError::Semantic(e) => write!(f, "invalid group: {e}"),
        }
    }
}

impl std::error::Error for SpecError {}

/// Parses and validates a spec.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    spec.validate().map_err(SpecError::Semantic)?;
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type PResult<T> = Result<T, SpecError>;

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError::Parse { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        let hit = self.peek() == Some(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn ident(&mut self) -> PResult<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }

    fn int(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn nat<T: TryFrom<i64>>(&mut self) -> PResult<T> {
        let start = self.pos;
        let v = self.int()?;
        T::try_from(v).map_err(|_| SpecError::Parse { pos: start, message: format!("{v} out of range") })
    }

    fn spec(&mut self) -> PResult<GroupSpec> {
        let (at, name) = self.ident()?;
        self.expect(b'(')?;
        let spec = match name.as_str() {
            "sym" => GroupSpec::Standard(StandardGroup::Symmetric(self.nat()?)),
            "alt" => GroupSpec::Standard(StandardGroup::Alternating(self.nat()?)),
            "cyc" => GroupSpec::Standard(StandardGroup::Cyclic(self.nat()?)),
            "dih" => GroupSpec::Standard(StandardGroup::Dihedral(self.nat()?)),
            "q8" => GroupSpec::Standard(StandardGroup::Quaternion8),
            "sl23" => GroupSpec::Standard(StandardGroup::Sl23),
            "wr" => {
                let base = self.spec()?;
                self.expect(b',')?;
                GroupSpec::Wreath(Box::new(base), self.nat()?)
            }
            "cprod" => {
                let h = self.spec()?;
                self.expect(b',')?;
                let k = self.spec()?;
                let phi = if self.eat(b',') { self.phi()? } else { Phi::Center };
                GroupSpec::CentralProduct(Box::new(h), Box::new(k), phi)
            }
            "dprod" => {
                let h = self.spec()?;
                self.expect(b',')?;
                GroupSpec::DirectProduct(Box::new(h), Box::new(self.spec()?))
            }
            "ult" => {
                let n = self.nat()?;
                self.expect(b',')?;
                GroupSpec::Ult(n, self.nat()?)
            }
            "extra" => {
                let p = self.nat()?;
                self.expect(b',')?;
                GroupSpec::Extraspecial(p, self.nat()?)
            }
            "W" => GroupSpec::ConstructionW(self.nat()?),
            "matgrp" => {
                let n = self.nat()?;
                self.expect(b',')?;
                let p = self.nat()?;
                let mut gens = Vec::new();
                while self.eat(b',') {
                    gens.push(self.matrix()?);
                }
                GroupSpec::MatGroup { n, p, gens }
            }
            _ => return Err(SpecError::Parse { pos: at, message: format!("unknown group '{name}'") }),
        };
        self.expect(b')')?;
        Ok(spec)
    }

    fn phi(&mut self) -> PResult<Phi> {
        let (at, key) = self.ident()?;
        if key != "phi" {
            return Err(SpecError::Parse { pos: at, message: "expected 'phi='".into() });
        }
        self.expect(b'=')?;
        let (at, kind) = self.ident()?;
        match kind.as_str() {
            "center" => Ok(Phi::Center),
            "trivial" => Ok(Phi::Trivial),
            "ids" => {
                self.expect(b'(')?;
                let h = self.nat()?;
                self.expect(b',')?;
                let k = self.nat()?;
                self.expect(b')')?;
                Ok(Phi::Ids(h, k))
            }
            _ => Err(SpecError::Parse {
                pos: at,
                message: format!("unknown phi '{kind}' (center, trivial or ids(h, k))"),
            }),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect(b'[')?;
        let mut out = vec![item(self)?];
        while self.eat(b',') {
            out.push(item(self)?);
        }
        self.expect(b']')?;
        Ok(out)
    }

    fn matrix(&mut self) -> PResult<Vec<Vec<i64>>> {
        self.list(|p| p.list(|p| p.int()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_specs() {
        assert_eq!(
            parse_spec("wr(dih(10), 3)").unwrap(),
            GroupSpec::Wreath(Box::new(GroupSpec::Standard(StandardGroup::Dihedral(10))), 3)
        );
        assert_eq!(parse_spec("W(7)").unwrap(), GroupSpec::ConstructionW(7));
        assert_eq!(parse_spec(" q8 ( ) ").unwrap(), GroupSpec::Standard(StandardGroup::Quaternion8));
    }

    #[test]
    fn semantic_errors() {
        assert_eq!(
            parse_spec("W(6)"),
            Err(SpecError::Semantic(comgraph_core::Error::NotValidPrime(6)))
        );
        assert!(matches!(parse_spec("W(5)"), Err(SpecError::Semantic(_))));
        assert!(matches!(parse_spec("sym(40)"), Err(SpecError::Semantic(_))));
    }

    #[test]
    fn parse_error_positions() {
        assert!(matches!(parse_spec("wr(sym(3) 2)"), Err(SpecError::Parse { pos: 10, .. })));
        assert!(matches!(parse_spec("foo(1)"), Err(SpecError::Parse { pos: 0, .. })));
        assert!(matches!(parse_spec("sym(3))"), Err(SpecError::Parse { pos: 6, .. })));
        assert!(matches!(parse_spec("sym(x)"), Err(SpecError::Parse { pos: 4, .. })));
        assert!(matches!(parse_spec("cyc(-3)"), Err(SpecError::Parse { pos: 4, .. })));
        assert!(matches!(parse_spec("cprod(q8(), q8(), phi=odd)"), Err(SpecError::Parse { pos: 22, .. })));
    }

    #[test]
    fn phi_forms() {
        for text in ["cprod(q8(), q8())", "cprod(q8(),q8(),phi=center)"] {
            assert!(matches!(parse_spec(text).unwrap(), GroupSpec::CentralProduct(_, _, Phi::Center)));
        }
        let s = parse_spec("cprod(q8(), cyc(4), phi = ids(3, 2))").unwrap();
        assert_eq!(s.to_string(), "cprod(q8(), cyc(4), phi=ids(3, 2))");
    }

    #[test]
    fn matrix_groups() {
        let s = parse_spec("matgrp(3, 7, [[3,6,2],[2,0,1],[0,0,1]], [[0,4,1],[5,0,3],[0,0,1]])").unwrap();
        let GroupSpec::MatGroup { n, p, gens } = &s else { panic!() };
        assert_eq!((*n, *p, gens.len()), (3, 7, 2));
        assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        let neg = parse_spec("matgrp(2, 5, [[-1, 0], [0, 1]])").unwrap();
        assert_eq!(neg.to_string(), "matgrp(2, 5, [[-1,0],[0,1]])");
    }
}
