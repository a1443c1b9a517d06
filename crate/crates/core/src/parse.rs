//! Text syntax for monomial ideals.
//!
//! ```text
//! input  := (decl ";")? ideal
//! decl   := "n" "=" uint
//! ideal  := gen ("," gen)*
//! gen    := factor ("*" factor)*
//! factor := var ("^" uint)?
//! var    := "x" uint            (1-based)
//! ```
//!
//! Whitespace between tokens is ignored. Without a declaration the variable
//! count is the highest index used. Offsets in errors are byte offsets.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Parses an ideal, inferring the variable count unless the text declares it.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_with_vars(text, None)
}

/// Parses an ideal in at least `min_vars` variables (if given).
pub fn parse_ideal_with_vars(text: &str, min_vars: Option<usize>) -> Result<MonomialIdeal> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let declared = p.declaration()?;
    let gens = p.ideal()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }

    let used = gens
        .iter()
        .flat_map(|g| g.iter().map(|f| f.var))
        .max()
        .unwrap_or(1);
    let n = match declared {
        Some((n, offset)) => {
            if n < used {
                return Err(Error::Syntax {
                    offset,
                    message: format!("declared {n} variables but x{used} is used"),
                });
            }
            n
        }
        None => used.max(min_vars.unwrap_or(0)),
    };

    let monomials = gens
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for f in factors {
                let slot = &mut e[f.var - 1];
                *slot = slot
                    .checked_add(f.exp)
                    .ok_or(Error::Overflow { offset: f.offset })?;
            }
            Ok(Monomial::new(e))
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, monomials)
}

/// Renders an ideal in the syntax accepted by [`parse_ideal`].
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    format!("n={}; {}", ideal.num_vars(), ideal)
}

/// Largest accepted variable index.
pub const MAX_VARS: usize = 64;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

struct Factor {
    var: usize,
    exp: u32,
    offset: usize,
}

type Factors = Vec<Factor>;

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> Error {
        match self.src.get(self.pos) {
            Some(&c) => Error::Syntax {
                offset: self.pos,
                message: format!("unexpected character {:?}", c as char),
            },
            None => Error::Syntax {
                offset: self.pos,
                message: "unexpected end of input".into(),
            },
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        // digits are ASCII so the slice is valid UTF-8
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Overflow { offset: start })
    }

    fn declaration(&mut self) -> Result<Option<(usize, usize)>> {
        if self.peek() != Some(b'n') {
            return Ok(None);
        }
        self.pos += 1;
        self.expect(b'=')?;
        self.skip_ws();
        let offset = self.pos;
        let n = self.uint()? as usize;
        if n == 0 {
            return Err(Error::Syntax {
                offset,
                message: "variable count must be positive".into(),
            });
        }
        self.expect(b';')?;
        Ok(Some((n, offset)))
    }

    fn ideal(&mut self) -> Result<Vec<Factors>> {
        let mut gens = vec![self.generator()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            gens.push(self.generator()?);
        }
        Ok(gens)
    }

    fn generator(&mut self) -> Result<Factors> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        let start = self.pos;
        self.expect(b'x')?;
        self.skip_ws();
        let offset = self.pos;
        let var = self.uint()? as usize;
        if var == 0 {
            return Err(Error::Syntax {
                offset,
                message: "variable indices start at 1".into(),
            });
        }
        if var > MAX_VARS {
            return Err(Error::Overflow { offset });
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.uint()?
        } else {
            1
        };
        Ok(Factor {
            var,
            exp,
            offset: start,
        })
    }
}
