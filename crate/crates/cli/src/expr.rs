//! Expressions over symmetric functions for the `expand` command, e.g.
//! `omega(Q[5,2,0])`, `Q[4,1]*h[2] - 2*QL[3,1;1]`, `s[2,1] + 1/2*p[3]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] factor ('*' factor)*
//! factor := number ['/' number] | 'omega(' expr ')' | '(' expr ')'
//!         | 'Q[' .. ']' | 'QL[' .. ']' | ('h'|'e'|'p'|'s'|'m') '[' parts ']'
//! ```

use eqsym::eulerian::Selector;
use eqsym::{Basis, SymF};
use num_bigint::BigInt;
use num_rational::BigRational;

type Fetch<'a> = dyn Fn(&Selector) -> anyhow::Result<SymF> + 'a;

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    fetch: &'a Fetch<'a>,
}

fn scalar(c: BigRational) -> SymF {
    SymF::scalar(Basis::H, c)
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> anyhow::Result<()> {
        anyhow::ensure!(self.eat(c), "expected {c:?} at offset {} in {:?}", self.pos, self.text());
        Ok(())
    }

    fn text(&self) -> String {
        self.src.iter().collect()
    }

    fn expr(&mut self) -> anyhow::Result<SymF> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> anyhow::Result<SymF> {
        let negate = self.eat('-');
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn number(&mut self) -> anyhow::Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.src[start..self.pos].iter().collect();
        digits.parse().map_err(|_| anyhow::anyhow!("expected a number at offset {start} in {:?}", self.text()))
    }

    /// The bracketed text after a name, brackets included.
    fn bracketed(&mut self) -> anyhow::Result<String> {
        let start = self.pos;
        self.expect('[')?;
        while self.peek().is_some_and(|c| c != ']') {
            self.pos += 1;
        }
        self.expect(']')?;
        Ok(self.src[start..self.pos].iter().collect())
    }

    fn factor(&mut self) -> anyhow::Result<SymF> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let den = if self.eat('/') { self.number()? } else { BigInt::from(1) };
                anyhow::ensure!(den != BigInt::from(0), "division by zero in {:?}", self.text());
                Ok(scalar(BigRational::new(num, den)))
            }
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                self.expect(')')?;
                Ok(f)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    self.pos += 1;
                }
                let name: String = self.src[start..self.pos].iter().collect();
                match name.as_str() {
                    "omega" => {
                        self.expect('(')?;
                        let f = self.expr()?;
                        self.expect(')')?;
                        Ok(f.omega()?)
                    }
                    "Q" | "QL" => {
                        let sel: Selector = format!("{name}{}", self.bracketed()?).parse()?;
                        (self.fetch)(&sel)
                    }
                    "h" | "e" | "p" | "s" | "m" => {
                        let f: SymF = format!("{name}{}", self.bracketed()?).parse()?;
                        Ok(f)
                    }
                    _ => anyhow::bail!("unknown name {name:?} in {:?}", self.text()),
                }
            }
            _ => anyhow::bail!("unexpected input at offset {} in {:?}", self.pos, self.text()),
        }
    }
}

/// Evaluates `src`, resolving each `Q` selector through `fetch`.
pub fn evaluate(src: &str, fetch: &Fetch<'_>) -> anyhow::Result<SymF> {
    let mut p = Parser { src: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, fetch };
    let f = p.expr()?;
    anyhow::ensure!(p.pos == p.src.len(), "trailing input at offset {} in {:?}", p.pos, p.text());
    Ok(f)
}
