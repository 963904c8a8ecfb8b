//! Generator-word input grammar.
//!
//! Tokens are separated by whitespace: `E i`, `F i`, `K i`, `K i-` (also
//! `Ki-`), `e i`, `f i`, `k i`, `k i-`, `t` and `idem c1,c2,…`. Upper-case
//! letters are type-A generators, lower-case ones coideal generators. A word
//! is read as a product from left to right.

use schurlab::algebra::Gen;
use schurlab::coideal::IGen;
use schurlab::{Result, SchurError};

/// One parsed token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Upper(Gen),
    Lower(Gen),
    T,
    Idem(Vec<u32>),
}

fn bad(msg: String) -> SchurError {
    SchurError::Validation(msg)
}

fn index(tok: &str) -> Result<(i32, bool)> {
    let (body, inv) = match tok.strip_suffix('-') {
        Some(b) => (b, true),
        None => (tok, false),
    };
    let i = body.parse::<i32>().map_err(|_| bad(format!("bad generator index {tok:?}")))?;
    if i < 1 {
        return Err(bad(format!("generator index {i} must be positive")));
    }
    Ok((i, inv))
}

pub fn parse(src: &str) -> Result<Vec<Token>> {
    let toks: Vec<&str> = src.split_whitespace().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < toks.len() {
        let head = toks[k];
        if head == "t" {
            out.push(Token::T);
            k += 1;
            continue;
        }
        if head == "idem" {
            let arg = toks.get(k + 1).ok_or_else(|| bad("idem needs a composition".into()))?;
            let comp = arg
                .split(',')
                .map(|x| x.parse::<u32>().map_err(|_| bad(format!("bad composition {arg:?}"))))
                .collect::<Result<Vec<_>>>()?;
            out.push(Token::Idem(comp));
            k += 2;
            continue;
        }
        // the index may be glued to the letter, as in `K2-`
        let (letter, rest) = head.split_at(1);
        let (arg, used) = if rest.is_empty() {
            let arg = toks.get(k + 1).ok_or_else(|| bad(format!("{letter} needs an index")))?;
            (*arg, 2)
        } else {
            (rest, 1)
        };
        let (i, inv) = index(arg)?;
        let g = match (letter.to_ascii_uppercase().as_str(), inv) {
            ("E", false) => Gen::E(i, 1),
            ("F", false) => Gen::F(i, 1),
            ("K", inv) => Gen::K(i, if inv { -1 } else { 1 }),
            _ => return Err(bad(format!("unknown generator token {head:?}"))),
        };
        out.push(if letter.chars().all(|c| c.is_ascii_uppercase()) { Token::Upper(g) } else { Token::Lower(g) });
        k += used;
    }
    if out.is_empty() {
        return Err(bad("empty generator word".into()));
    }
    Ok(out)
}

/// A word for the type-A algebras: upper-case generators and idempotents.
pub fn type_a(toks: &[Token]) -> Result<Vec<Gen>> {
    toks.iter()
        .map(|t| match t {
            Token::Upper(g) => Ok(g.clone()),
            Token::Idem(c) => Ok(Gen::Idem(c.clone())),
            other => Err(bad(format!("{other:?} is not a type-A generator"))),
        })
        .collect()
}

/// A word for `S^ȷ_d`: lower-case generators and idempotents.
pub fn jmath(toks: &[Token]) -> Result<Vec<Gen>> {
    toks.iter()
        .map(|t| match t {
            Token::Lower(g) => Ok(g.clone()),
            Token::Idem(c) => Ok(Gen::Idem(c.clone())),
            other => Err(bad(format!("{other:?} is not a ȷ generator"))),
        })
        .collect()
}

/// A word for `S^ı_d`: `e i`, `f i`, `k i`, `k i-` with `i < r`, `t`, and
/// idempotents.
pub fn imath(toks: &[Token]) -> Result<Vec<IGen>> {
    toks.iter()
        .map(|t| match t {
            Token::Lower(Gen::E(i, _)) => Ok(IGen::E(*i)),
            Token::Lower(Gen::F(i, _)) => Ok(IGen::F(*i)),
            Token::Lower(Gen::K(i, s)) => Ok(IGen::K(*i, *s)),
            Token::T => Ok(IGen::T),
            Token::Idem(c) => Ok(IGen::Idem(c.clone())),
            other => Err(bad(format!("{other:?} is not a ı generator"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let w = parse("E 1 F 2 K 1 K 2- Ki- idem 1,0,2").unwrap_err();
        assert!(matches!(w, SchurError::Validation(_)));
        let w = parse("E 1 F 2 K 1 K 2- K3- idem 1,0,2").unwrap();
        assert_eq!(
            type_a(&w).unwrap(),
            vec![Gen::E(1, 1), Gen::F(2, 1), Gen::K(1, 1), Gen::K(2, -1), Gen::K(3, -1), Gen::Idem(vec![1, 0, 2])]
        );
        let w = parse("e 1 t k 1-").unwrap();
        assert_eq!(imath(&w).unwrap(), vec![IGen::E(1), IGen::T, IGen::K(1, -1)]);
        assert!(type_a(&w).is_err());
        assert!(parse("").is_err());
        assert!(parse("E 0").is_err());
        assert!(parse("idem 1,x").is_err());
    }
}
