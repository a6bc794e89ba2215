//! Text descriptions of groups.
//!
//! Two forms are accepted, with keys on one line or spread over several:
//!
//! ```text
//! gens: (1,2),(1,2,3) deg: 3
//! name: wreath(alt(5), 7)
//! ```
//!
//! Family arguments are integers or, for `wreath` and `direct`, nested
//! families. `affine_example(k; ..)` takes the example number, then its
//! parameters: `affine_example(1)`, `affine_example(2; 3, 7)`,
//! `affine_example(3; 7)`.

use std::fmt;
use std::str::FromStr;

use crate::config::Caps;
use crate::constructions::{examples, named, wreath};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{parse_perm_list, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    ElemAbelianP2(usize),
    Dihedral(usize),
    Sym(usize),
    Alt(usize),
    Psl2(u32),
    Pgl2(u32),
    Psigmal2(u32),
    Sl2(u32),
    Gl2(u32),
    Agl1(u32),
    Agl2(u32),
    M10,
    Pgammal29,
    Quaternion8,
    Wreath(Box<Family>, usize),
    Direct(Vec<Family>),
    AffineExample(u32, Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Gens { degree: usize, gens: Vec<Perm> },
    Named(Family),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic({n})"),
            Family::ElemAbelianP2(p) => write!(f, "elem_abelian_p2({p})"),
            Family::Dihedral(n) => write!(f, "dihedral({n})"),
            Family::Sym(n) => write!(f, "sym({n})"),
            Family::Alt(n) => write!(f, "alt({n})"),
            Family::Psl2(q) => write!(f, "psl2({q})"),
            Family::Pgl2(q) => write!(f, "pgl2({q})"),
            Family::Psigmal2(q) => write!(f, "psigmal2({q})"),
            Family::Sl2(q) => write!(f, "sl2({q})"),
            Family::Gl2(q) => write!(f, "gl2({q})"),
            Family::Agl1(q) => write!(f, "agl1({q})"),
            Family::Agl2(q) => write!(f, "agl2({q})"),
            Family::M10 => write!(f, "m10"),
            Family::Pgammal29 => write!(f, "pgammal_2_9"),
            Family::Quaternion8 => write!(f, "quaternion8"),
            Family::Wreath(s, p) => write!(f, "wreath({s},{p})"),
            Family::Direct(fs) => {
                write!(f, "direct(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Family::AffineExample(k, ps) => {
                write!(f, "affine_example({k}")?;
                for (i, p) in ps.iter().enumerate() {
                    write!(f, "{}{p}", if i == 0 { ";" } else { "," })?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    /// A one-line form that parses back to the same spec.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(fam) => write!(f, "name: {fam}"),
            GroupSpec::Gens { degree, gens } => {
                write!(f, "gens: ")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, " deg: {degree}")
            }
        }
    }
}

impl Family {
    pub fn build(&self, caps: &Caps) -> Result<PermGroup> {
        match *self {
            Family::Cyclic(n) => named::cyclic(n),
            Family::ElemAbelianP2(p) => named::elem_abelian_p2(p),
            Family::Dihedral(n) => named::dihedral(n),
            Family::Sym(n) => {
                caps.check_degree(n)?;
                named::sym(n)
            }
            Family::Alt(n) => {
                caps.check_degree(n)?;
                named::alt(n)
            }
            Family::Psl2(q) => named::psl2(q),
            Family::Pgl2(q) => named::pgl2(q),
            Family::Psigmal2(q) => named::psigmal2(q),
            Family::Sl2(q) => named::sl2(q),
            Family::Gl2(q) => named::gl2(q),
            Family::Agl1(q) => named::agl1(q),
            Family::Agl2(q) => named::agl2(q),
            Family::M10 => named::m10(),
            Family::Pgammal29 => named::pgammal_2_9(),
            Family::Quaternion8 => named::quaternion8(),
            Family::Wreath(ref s, p) => {
                let s = s.build(caps)?;
                if !crate::structure::is_prime(p as u64) {
                    return Err(Error::UnsupportedParams(format!("{p} is not prime")));
                }
                Ok(wreath::wreath_cyclic(&s, p, caps)?.group)
            }
            Family::Direct(ref fs) => {
                let groups = fs
                    .iter()
                    .map(|f| f.build(caps))
                    .collect::<Result<Vec<_>>>()?;
                named::direct(&groups)
            }
            Family::AffineExample(k, ref ps) => {
                let ex = match (k, ps.as_slice()) {
                    (1, []) => examples::example1(caps)?,
                    (2, [p, q]) => examples::example2(*p, *q, caps)?,
                    (3, [q]) => examples::example3(*q, caps)?,
                    _ => {
                        return Err(Error::UnsupportedParams(format!(
                            "affine_example({k}) with parameters {ps:?}"
                        )))
                    }
                };
                Ok(ex.group(caps)?.group)
            }
        }
    }
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let start = skip_ws(text, 0);
        if text[start..].starts_with("name:") {
            let mut p = Parser {
                text,
                pos: start + "name:".len(),
            };
            let fam = p.family()?;
            p.skip();
            if p.pos < text.len() {
                return Err(p.error("unexpected text after the family"));
            }
            return Ok(GroupSpec::Named(fam));
        }
        if text[start..].starts_with("gens:") {
            let gens_start = start + "gens:".len();
            let deg_at = text[gens_start..]
                .find("deg:")
                .map(|i| gens_start + i)
                .ok_or_else(|| error_at(text, text.len(), "missing 'deg:'"))?;
            let mut p = Parser {
                text,
                pos: deg_at + "deg:".len(),
            };
            let degree = p.int()? as usize;
            p.skip();
            if p.pos < text.len() {
                return Err(p.error("unexpected text after the degree"));
            }
            if degree == 0 {
                return Err(error_at(text, deg_at, "degree must be positive"));
            }
            let gens_text = &text[gens_start..deg_at];
            let first = skip_ws(text, gens_start);
            let gens = if first >= deg_at {
                Vec::new()
            } else {
                parse_perm_list(gens_text, degree).map_err(|e| match e {
                    Error::Parse {
                        column, message, ..
                    } => error_at(text, gens_start + column - 1, &message),
                    other => other,
                })?
            };
            return Ok(GroupSpec::Gens { degree, gens });
        }
        Err(error_at(text, start, "expected 'gens:' or 'name:'"))
    }

    pub fn build(&self, caps: &Caps) -> Result<PermGroup> {
        match self {
            GroupSpec::Gens { degree, gens } => {
                caps.check_degree(*degree)?;
                PermGroup::from_generators(*degree, gens.clone())
            }
            GroupSpec::Named(f) => f.build(caps),
        }
    }

    /// Short identifier: the family, or `gens` for explicit generators.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Named(f) => f.to_string(),
            GroupSpec::Gens { .. } => "gens".to_string(),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

fn skip_ws(text: &str, mut pos: usize) -> usize {
    while let Some(c) = text[pos..].chars().next() {
        if !c.is_whitespace() {
            break;
        }
        pos += c.len_utf8();
    }
    pos
}

/// A parse error at byte offset `pos`, reported as 1-based line and column.
fn error_at(text: &str, pos: usize, message: &str) -> Error {
    let before = &text[..pos.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    Error::Parse {
        line,
        column: before[line_start..].chars().count() + 1,
        message: message.to_string(),
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip(&mut self) {
        self.pos = skip_ws(self.text, self.pos);
    }

    fn error(&self, message: &str) -> Error {
        error_at(self.text, self.pos, message)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip();
        let digits: String = self.text[self.pos..]
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let v = digits
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += digits.len();
        Ok(v)
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| error_at(self.text, at, "number out of range"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip();
        let id: String = self.text[self.pos..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        if id.is_empty() {
            return Err(self.error("expected a family name"));
        }
        self.pos += id.len();
        Ok(id)
    }

    fn family(&mut self) -> Result<Family> {
        self.skip();
        let at = self.pos;
        let id = self.ident()?;
        let has_args = self.peek() == Some('(');
        let no_args = |f: Family, p: &mut Self| -> Result<Family> {
            if has_args {
                p.expect('(')?;
                p.expect(')')?;
            }
            Ok(f)
        };
        match id.as_str() {
            "m10" => return no_args(Family::M10, self),
            "pgammal_2_9" => return no_args(Family::Pgammal29, self),
            "quaternion8" => return no_args(Family::Quaternion8, self),
            _ => {}
        }
        self.expect('(')?;
        let fam = match id.as_str() {
            "cyclic" => Family::Cyclic(self.small()? as usize),
            "elem_abelian_p2" => Family::ElemAbelianP2(self.small()? as usize),
            "dihedral" => Family::Dihedral(self.small()? as usize),
            "sym" => Family::Sym(self.small()? as usize),
            "alt" => Family::Alt(self.small()? as usize),
            "psl2" => Family::Psl2(self.small()?),
            "pgl2" => Family::Pgl2(self.small()?),
            "psigmal2" => Family::Psigmal2(self.small()?),
            "sl2" => Family::Sl2(self.small()?),
            "gl2" => Family::Gl2(self.small()?),
            "agl1" => Family::Agl1(self.small()?),
            "agl2" => Family::Agl2(self.small()?),
            "wreath" => {
                let s = self.family()?;
                self.expect(',')?;
                Family::Wreath(Box::new(s), self.small()? as usize)
            }
            "direct" => {
                let mut fs = vec![self.family()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    fs.push(self.family()?);
                }
                Family::Direct(fs)
            }
            "affine_example" => {
                let k = self.small()?;
                let mut ps = Vec::new();
                if self.peek() == Some(';') {
                    self.pos += 1;
                    ps.push(self.small()?);
                    while self.peek() == Some(',') {
                        self.pos += 1;
                        ps.push(self.small()?);
                    }
                }
                Family::AffineExample(k, ps)
            }
            _ => return Err(error_at(self.text, at, &format!("unknown family '{id}'"))),
        };
        self.expect(')')?;
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> PermGroup {
        GroupSpec::parse(s)
            .unwrap()
            .build(&Caps::default())
            .unwrap()
    }

    #[test]
    fn named_and_generated() {
        assert_eq!(build("name: sym(6)").order(), 720);
        assert_eq!(build("name: psl2(11)").order(), 660);
        assert_eq!(build("  name:m10").order(), 720);
        assert_eq!(build("name: direct(sym(3), cyclic(2))").order(), 12);
        assert_eq!(build("gens: (1,2),(1,2,3) deg: 3").order(), 6);
        assert_eq!(
            build("gens: (1,2),\n      (3,4) ,(1,3)(2,4)\ndeg: 4").order(),
            8
        );
        assert_eq!(build("gens: deg: 4").order(), 1);
        assert_eq!(build("name: affine_example(1)").order(), 320);
        assert_eq!(build("name: affine_example(2; 3, 7)").order(), 27 * 343);
    }

    #[test]
    fn wreath_family() {
        let spec = GroupSpec::parse("name: wreath(alt(5),7)").unwrap();
        assert_eq!(
            spec,
            GroupSpec::Named(Family::Wreath(Box::new(Family::Alt(5)), 7))
        );
        let g = spec.build(&Caps::default()).unwrap();
        assert_eq!(g.order(), 60u128.pow(7) * 7);
        assert_eq!(g.degree(), 35);
    }

    #[test]
    fn round_trip() {
        for s in [
            "name: wreath(alt(5),7)",
            "name: affine_example(2;3,7)",
            "name: direct(cyclic(2),quaternion8)",
            "gens: (1,2,3),(1,2) deg: 4",
        ] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    fn loc(s: &str) -> (usize, usize) {
        match GroupSpec::parse(s).unwrap_err() {
            Error::Parse { line, column, .. } => (line, column),
            e => panic!("not a parse error: {e}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(loc("name: sim(4)"), (1, 7));
        assert_eq!(loc("name: sym(4"), (1, 12));
        assert_eq!(loc("gens: (1,2),(1,x) deg: 3"), (1, 16));
        assert_eq!(loc("gens: (1,2)\n(1,x) deg: 3"), (2, 4));
        assert_eq!(loc("gens: (1,2)"), (1, 12));
        assert_eq!(loc("group: sym(3)"), (1, 1));
        assert_eq!(loc("name: sym(3) extra"), (1, 14));
        assert!(matches!(
            GroupSpec::parse("gens: (1,4) deg: 3"),
            Err(Error::InvalidPermutation(_)) | Err(Error::Parse { .. })
        ));
        assert!(GroupSpec::parse("name: affine_example(4)")
            .unwrap()
            .build(&Caps::default())
            .is_err());
    }
}
