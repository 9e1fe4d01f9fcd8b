//! One-line group expressions: `Q8`, `C(8)`, `C(4)xC(2)`, `D(8)`, `E(2,3)`,
//! `Heis(3)`, `S(4)`, `file:<path>`, `perm:<path>`. `x` is a left-associative
//! direct product; `file:` and `perm:` take the rest of the line as a path.

use std::fmt;
use std::fs;

use thiserror::Error;

use crate::grouptheory::{
    self, direct_product, from_cayley_table, from_permutations, parse_cayley_table,
    parse_permutation_generators, FiniteGroup, GroupError, MAX_ORDER_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Quaternion8,
    Cyclic(usize),
    Dihedral(usize),
    ElementaryAbelian(u64, usize),
    Heisenberg(u64),
    Symmetric(usize),
    CayleyFile(String),
    PermutationFile(String),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_spaces(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_spaces();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected '{token}'"))
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_spaces();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        let value = self.rest()[..digits]
            .parse()
            .or_else(|_| self.error("integer too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn size(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let value = self.integer()?;
        usize::try_from(value).or_else(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    fn path(&mut self) -> Result<String, ParseError> {
        let path = self.rest().trim();
        if path.is_empty() {
            return self.error("expected a path");
        }
        self.pos = self.text.len();
        Ok(path.to_string())
    }

    fn factor(&mut self) -> Result<GroupSpec, ParseError> {
        self.skip_spaces();
        if self.eat("Q8") {
            return Ok(GroupSpec::Quaternion8);
        }
        if self.eat("file:") {
            return self.path().map(GroupSpec::CayleyFile);
        }
        if self.eat("perm:") {
            return self.path().map(GroupSpec::PermutationFile);
        }
        // Longer names first so `Heis` is not read as something shorter.
        for name in ["Heis", "C", "D", "E", "S"] {
            if !self.eat(name) {
                continue;
            }
            self.expect("(")?;
            let spec = match name {
                "Heis" => GroupSpec::Heisenberg(self.integer()?),
                "C" => GroupSpec::Cyclic(self.size()?),
                "D" => GroupSpec::Dihedral(self.size()?),
                "S" => GroupSpec::Symmetric(self.size()?),
                _ => {
                    let p = self.integer()?;
                    self.expect(",")?;
                    GroupSpec::ElementaryAbelian(p, self.size()?)
                }
            };
            self.expect(")")?;
            return Ok(spec);
        }
        self.error("expected one of Q8, C(m), D(m), E(p,n), Heis(p), S(m), file:, perm:")
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut parser = Parser { text, pos: 0 };
        let mut spec = parser.factor()?;
        while parser.eat("x") {
            spec = GroupSpec::Product(Box::new(spec), Box::new(parser.factor()?));
        }
        parser.skip_spaces();
        if !parser.rest().is_empty() {
            return parser.error("unexpected trailing input");
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup, BuildError> {
        Ok(match self {
            GroupSpec::Quaternion8 => grouptheory::quaternion8()?,
            GroupSpec::Cyclic(m) => grouptheory::cyclic(*m)?,
            GroupSpec::Dihedral(m) => grouptheory::dihedral(*m)?,
            GroupSpec::ElementaryAbelian(p, n) => grouptheory::elementary_abelian(*p, *n)?,
            GroupSpec::Heisenberg(p) => grouptheory::heisenberg(*p)?,
            GroupSpec::Symmetric(m) => grouptheory::symmetric(*m)?,
            GroupSpec::CayleyFile(path) => {
                let table = parse_cayley_table(&read(path)?)?;
                from_cayley_table(table, path.clone())?
            }
            GroupSpec::PermutationFile(path) => {
                let (degree, generators) = parse_permutation_generators(&read(path)?)?;
                from_permutations(degree, &generators, MAX_ORDER_CAP)?.with_name(path.clone())
            }
            GroupSpec::Product(a, b) => direct_product(&a.build()?, &b.build()?)?,
        })
    }
}

fn read(path: &str) -> Result<String, BuildError> {
    fs::read_to_string(path).map_err(|source| BuildError::Io {
        path: path.to_string(),
        source,
    })
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Quaternion8 => f.write_str("Q8"),
            GroupSpec::Cyclic(m) => write!(f, "C({m})"),
            GroupSpec::Dihedral(m) => write!(f, "D({m})"),
            GroupSpec::ElementaryAbelian(p, n) => write!(f, "E({p},{n})"),
            GroupSpec::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupSpec::Symmetric(m) => write!(f, "S({m})"),
            GroupSpec::CayleyFile(path) => write!(f, "file:{path}"),
            GroupSpec::PermutationFile(path) => write!(f, "perm:{path}"),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_builders() {
        assert_eq!(GroupSpec::parse("Q8").unwrap(), GroupSpec::Quaternion8);
        assert_eq!(GroupSpec::parse("C(8)").unwrap(), GroupSpec::Cyclic(8));
        assert_eq!(
            GroupSpec::parse("E(2, 3)").unwrap(),
            GroupSpec::ElementaryAbelian(2, 3)
        );
        assert_eq!(
            GroupSpec::parse("Heis(3)").unwrap(),
            GroupSpec::Heisenberg(3)
        );
        assert_eq!(
            GroupSpec::parse("file: tables/q8.txt").unwrap(),
            GroupSpec::CayleyFile("tables/q8.txt".into())
        );
    }

    #[test]
    fn product_is_left_associative() {
        let spec = GroupSpec::parse("C(2)xC(3)xD(8)").unwrap();
        let expected = GroupSpec::Product(
            Box::new(GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(2)),
                Box::new(GroupSpec::Cyclic(3)),
            )),
            Box::new(GroupSpec::Dihedral(8)),
        );
        assert_eq!(spec, expected);
        assert_eq!(spec.to_string(), "C(2)xC(3)xD(8)");
        assert_eq!(spec.build().unwrap().order(), 48);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(GroupSpec::parse("C(4)xQ9").unwrap_err().position, 5);
        assert_eq!(GroupSpec::parse("C(").unwrap_err().position, 2);
        assert_eq!(GroupSpec::parse("E(2 3)").unwrap_err().position, 4);
        assert_eq!(GroupSpec::parse("Q8 Q8").unwrap_err().position, 3);
        assert_eq!(GroupSpec::parse("").unwrap_err().position, 0);
        assert!(GroupSpec::parse("file:").is_err());
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            GroupSpec::parse("S(6)").unwrap().build(),
            Err(BuildError::Group(GroupError::BadArgument(_)))
        ));
        assert!(matches!(
            GroupSpec::parse("file:/nonexistent/table").unwrap().build(),
            Err(BuildError::Io { .. })
        ));
    }
}
