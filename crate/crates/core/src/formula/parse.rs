use super::Formula;
use crate::{Error, Result};

/// Parse a formula in the concrete syntax
///
/// ```text
/// formula := disj
/// disj    := conj ('|' conj)*
/// conj    := atom ('&' atom)*
/// atom    := 'T' | 'F' | ident | '~' ident
///          | 'dep(' ident* ';' ident ')' | 'dep(' ident ')' | '(' formula ')'
/// ```
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let f = p.disj()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return None,
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn disj(&mut self) -> Result<Formula> {
        let mut f = self.conj()?;
        while self.peek() == Some(b'|') {
            self.pos += 1;
            f = Formula::or(f, self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut f = self.atom()?;
        while self.peek() == Some(b'&') {
            self.pos += 1;
            f = Formula::and(f, self.atom()?);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.disj()?;
                self.expect(b')')?;
                Ok(f)
            }
            Some(b'~') => {
                let neg_pos = self.pos;
                self.pos += 1;
                let save = self.pos;
                match self.ident() {
                    Some(name) if name != "T" && name != "F" && !self.dep_follows(&name) => {
                        Ok(Formula::NegVar(name))
                    }
                    _ => {
                        self.pos = save;
                        Err(Error::NegationNotOnAtom { pos: neg_pos })
                    }
                }
            }
            Some(_) => {
                let start = self.pos;
                let Some(name) = self.ident() else {
                    return Err(self.error("expected a formula"));
                };
                match name.as_str() {
                    "T" => Ok(Formula::Top),
                    "F" => Ok(Formula::Bot),
                    "dep" if self.peek() == Some(b'(') => {
                        self.pos += 1;
                        self.dep_body(start)
                    }
                    _ => Ok(Formula::Var(name)),
                }
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn dep_follows(&mut self, name: &str) -> bool {
        name == "dep" && self.peek() == Some(b'(')
    }

    fn dep_body(&mut self, start: usize) -> Result<Formula> {
        let mut args = Vec::new();
        while let Some(id) = self.ident() {
            args.push(id);
        }
        match self.peek() {
            Some(b';') => {
                self.pos += 1;
                let Some(b) = self.ident() else {
                    return Err(self.error("expected the determined variable after `;`"));
                };
                self.expect(b')')?;
                Ok(Formula::Dep(args, b))
            }
            Some(b')') if args.len() == 1 => {
                self.pos += 1;
                Ok(Formula::Dep(Vec::new(), args.pop().unwrap()))
            }
            Some(b')') => Err(Error::Syntax {
                pos: start,
                msg: "dependence atom without `;` takes exactly one variable".into(),
            }),
            _ => Err(self.error("expected `;` or `)` in dependence atom")),
        }
    }
}
