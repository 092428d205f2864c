//! Named modules and composite expressions such as `sum(trivial,Zmod(3))`.
//!
//! Grammar:
//! ```text
//! expr  := name | name '(' args ')' | 'Zmod' digits
//! name  := trivial | sign | regular | zero | Zmod | induce | syzygy
//!        | cosyzygy | sum | tensor | hom
//! ```

use std::sync::Arc;

use crate::constructions::{direct_sum, hom_module, induce, tensor};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::FiniteGroup;
use crate::ring::CoefficientRing;
use crate::stable::{cosyzygy, syzygy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    Zmod(i64),
    Call(String, Vec<Expr>),
}

pub fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "module expression '{}': {what} at column {}",
            String::from_utf8_lossy(self.s),
            self.pos + 1
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("expected a number"))
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == c {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        self.skip_ws();
        let name = self.ident();
        if name.is_empty() {
            return Err(self.error("expected a module name"));
        }
        if name == "Zmod" {
            if self.eat(b'(') {
                self.skip_ws();
                let m = self.number()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                return Ok(Expr::Zmod(m));
            }
            return Ok(Expr::Zmod(self.number()?));
        }
        if !self.eat(b'(') {
            return Ok(Expr::Atom(name));
        }
        let mut args = vec![self.expr()?];
        while self.eat(b',') {
            args.push(self.expr()?);
        }
        if !self.eat(b')') {
            return Err(self.error("expected ')'"));
        }
        Ok(Expr::Call(name, args))
    }
}

pub fn build(e: &Expr, ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<GModule> {
    build_with(e, ring, group, &|_| None)
}

/// Builds an expression; atoms not among the builtins are looked up with
/// `lookup`.
pub fn build_with(
    e: &Expr,
    ring: &CoefficientRing,
    group: &Arc<FiniteGroup>,
    lookup: &dyn Fn(&str) -> Option<GModule>,
) -> Result<GModule> {
    let arity = |name: &str, args: &[Expr], n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!("{name} takes {n} argument(s), got {}", args.len())))
        }
    };
    let rec = |x: &Expr| build_with(x, ring, group, lookup);
    Ok(match e {
        Expr::Zmod(m) if *m >= 1 => GModule::cyclic_trivial(ring, group, *m),
        Expr::Zmod(m) => return Err(Error::Parse(format!("Zmod({m}) needs m ≥ 1"))),
        Expr::Atom(a) => match a.as_str() {
            "trivial" => GModule::trivial(ring, group),
            "sign" => GModule::sign(ring, group)?,
            "regular" => GModule::regular(ring, group),
            "zero" => GModule::zero(ring, group),
            other => lookup(other).ok_or_else(|| Error::Parse(format!("unknown module '{other}'")))?,
        },
        Expr::Call(name, args) => match name.as_str() {
            "induce" => {
                arity(name, args, 1)?;
                induce(&rec(&args[0])?).module
            }
            "syzygy" => {
                arity(name, args, 1)?;
                syzygy(&rec(&args[0])?)
            }
            "cosyzygy" => {
                arity(name, args, 1)?;
                cosyzygy(&rec(&args[0])?)?
            }
            "sum" => {
                let parts = args.iter().map(rec).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&GModule> = parts.iter().collect();
                direct_sum(&refs)?.module
            }
            "tensor" => {
                arity(name, args, 2)?;
                tensor(&rec(&args[0])?, &rec(&args[1])?)?
            }
            "hom" => {
                arity(name, args, 2)?;
                hom_module(&rec(&args[0])?, &rec(&args[1])?)?.module
            }
            other => return Err(Error::Parse(format!("unknown construction '{other}'"))),
        },
    })
}

/// Parses and builds a module expression.
pub fn module(expr: &str, ring: &CoefficientRing, group: &Arc<FiniteGroup>) -> Result<GModule> {
    build(&parse(expr)?, ring, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::k_invariants;

    #[test]
    fn expressions() {
        assert_eq!(parse("Zmod4").unwrap(), Expr::Zmod(4));
        assert_eq!(parse("Zmod(4)").unwrap(), Expr::Zmod(4));
        assert_eq!(
            parse("sum(trivial, Zmod(3))").unwrap(),
            Expr::Call("sum".into(), vec![Expr::Atom("trivial".into()), Expr::Zmod(3)])
        );
        assert!(parse("sum(trivial").is_err());
        assert!(parse("").is_err());
        let z = CoefficientRing::Integers;
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let m = module("tensor(regular,sign)", &z, &g).unwrap();
        assert_eq!(m.gens(), 2);
        assert_eq!(k_invariants(&module("Zmod4", &z, &g).unwrap()).to_string(), "Z/4");
        assert!(module("frob", &z, &g).is_err());
        let c3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
        assert!(module("sign", &z, &c3).is_err());
    }
}
