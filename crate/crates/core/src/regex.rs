//! A small regular-expression dialect: `+` is union, juxtaposition is
//! concatenation, postfix `*` is star, `ε` (or `eps`) is the empty word and
//! `∅` the empty language. Letters are the names of the declared alphabet.
//!
//! Expressions compile to ε-free automata through the position (Glushkov)
//! construction.

use crate::automata::{determinize, minimize, Dfa, Nfa};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RegexAst {
    Empty,
    Epsilon,
    Letter(usize),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(l: RegexAst, r: RegexAst) -> RegexAst {
        RegexAst::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: RegexAst, r: RegexAst) -> RegexAst {
        RegexAst::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(e: RegexAst) -> RegexAst {
        RegexAst::Star(Box::new(e))
    }

    /// Number of letter occurrences.
    pub fn positions(&self) -> usize {
        match self {
            RegexAst::Empty | RegexAst::Epsilon => 0,
            RegexAst::Letter(_) => 1,
            RegexAst::Union(l, r) | RegexAst::Concat(l, r) => l.positions() + r.positions(),
            RegexAst::Star(e) => e.positions(),
        }
    }

    /// Renders the expression with letter names, using as few parentheses
    /// as keep the tree shape when parsed back.
    pub fn display<'a>(&'a self, letters: &'a [String]) -> impl fmt::Display + 'a {
        Printer { ast: self, letters }
    }
}

#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Level {
    Union,
    Concat,
    Atom,
}

struct Printer<'a> {
    ast: &'a RegexAst,
    letters: &'a [String],
}

impl Printer<'_> {
    fn write(&self, e: &RegexAst, min: Level, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let own = match e {
            RegexAst::Union(..) => Level::Union,
            RegexAst::Concat(..) => Level::Concat,
            _ => Level::Atom,
        };
        if own < min {
            write!(f, "(")?;
            self.write(e, Level::Union, f)?;
            return write!(f, ")");
        }
        match e {
            RegexAst::Empty => write!(f, "∅"),
            RegexAst::Epsilon => write!(f, "ε"),
            RegexAst::Letter(a) => write!(f, "{}", self.letters[*a]),
            RegexAst::Union(l, r) => {
                self.write(l, Level::Union, f)?;
                write!(f, "+")?;
                self.write(r, Level::Concat, f)
            }
            RegexAst::Concat(l, r) => {
                self.write(l, Level::Concat, f)?;
                self.write(r, Level::Atom, f)
            }
            RegexAst::Star(inner) => {
                self.write(inner, Level::Atom, f)?;
                write!(f, "*")
            }
        }
    }
}

impl fmt::Display for Printer<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.ast, Level::Union, f)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Letter(usize),
    Epsilon,
    Empty,
    Plus,
    Star,
    Open,
    Close,
}

fn tokenize(text: &str, letters: &[String]) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let fixed = match c {
            '+' => Some(Token::Plus),
            '*' => Some(Token::Star),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            'ε' => Some(Token::Epsilon),
            '∅' => Some(Token::Empty),
            _ => None,
        };
        if let Some(tok) = fixed {
            out.push((i, tok));
            i += c.len_utf8();
            continue;
        }
        // longest letter name wins; `eps` only when no letter matches longer
        let best = letters
            .iter()
            .enumerate()
            .filter(|(_, name)| !name.is_empty() && rest.starts_with(name.as_str()))
            .max_by_key(|(_, name)| name.len());
        match best {
            Some((a, name)) if !(rest.starts_with("eps") && name.len() < 3) => {
                out.push((i, Token::Letter(a)));
                i += name.len();
            }
            _ if rest.starts_with("eps") => {
                out.push((i, Token::Epsilon));
                i += 3;
            }
            _ => {
                let name: String = rest
                    .chars()
                    .take_while(|c| c.is_alphanumeric() || *c == '_')
                    .collect();
                let name = if name.is_empty() { c.to_string() } else { name };
                return Err(Error::UnknownLetter { name, position: i });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.position(),
            message: message.to_string(),
        }
    }

    fn union(&mut self) -> Result<RegexAst> {
        let mut left = self.concat()?;
        while self.peek() == Some(&Token::Plus) {
            self.at += 1;
            let right = self.concat()?;
            left = RegexAst::union(left, right);
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<RegexAst> {
        let mut left = self.postfix()?;
        while matches!(
            self.peek(),
            Some(Token::Letter(_) | Token::Epsilon | Token::Empty | Token::Open)
        ) {
            let right = self.postfix()?;
            left = RegexAst::concat(left, right);
        }
        Ok(left)
    }

    fn postfix(&mut self) -> Result<RegexAst> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.at += 1;
            e = RegexAst::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<RegexAst> {
        let e = match self.peek() {
            Some(Token::Letter(a)) => RegexAst::Letter(*a),
            Some(Token::Epsilon) => RegexAst::Epsilon,
            Some(Token::Empty) => RegexAst::Empty,
            Some(Token::Open) => {
                self.at += 1;
                let inner = self.union()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.syntax("expected ')'"));
                }
                inner
            }
            Some(_) => return Err(self.syntax("expected a letter, ε or '('")),
            None => return Err(self.syntax("unexpected end of expression")),
        };
        self.at += 1;
        Ok(e)
    }
}

/// Parses `text` over the given letter names. Star binds tighter than
/// concatenation, which binds tighter than union; both binary operators
/// associate to the left.
pub fn parse_regex(text: &str, letters: &[String]) -> Result<RegexAst> {
    let mut p = Parser {
        tokens: tokenize(text, letters)?,
        at: 0,
        end: text.len(),
    };
    let ast = p.union()?;
    if p.at != p.tokens.len() {
        return Err(p.syntax("unexpected token"));
    }
    Ok(ast)
}

struct Glushkov {
    symbol: Vec<usize>,
    follow: Vec<Vec<usize>>,
}

struct Summary {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

impl Glushkov {
    fn walk(&mut self, e: &RegexAst) -> Summary {
        match e {
            RegexAst::Empty => Summary {
                nullable: false,
                first: vec![],
                last: vec![],
            },
            RegexAst::Epsilon => Summary {
                nullable: true,
                first: vec![],
                last: vec![],
            },
            RegexAst::Letter(a) => {
                self.symbol.push(*a);
                self.follow.push(Vec::new());
                let p = self.symbol.len();
                Summary {
                    nullable: false,
                    first: vec![p],
                    last: vec![p],
                }
            }
            RegexAst::Union(l, r) => {
                let l = self.walk(l);
                let r = self.walk(r);
                Summary {
                    nullable: l.nullable || r.nullable,
                    first: [l.first, r.first].concat(),
                    last: [l.last, r.last].concat(),
                }
            }
            RegexAst::Concat(l, r) => {
                let l = self.walk(l);
                let r = self.walk(r);
                for &p in &l.last {
                    self.follow[p - 1].extend(&r.first);
                }
                Summary {
                    nullable: l.nullable && r.nullable,
                    first: if l.nullable {
                        [l.first, r.first.clone()].concat()
                    } else {
                        l.first
                    },
                    last: if r.nullable {
                        [l.last, r.last].concat()
                    } else {
                        r.last
                    },
                }
            }
            RegexAst::Star(inner) => {
                let s = self.walk(inner);
                for &p in &s.last {
                    self.follow[p - 1].extend(&s.first);
                }
                Summary {
                    nullable: true,
                    ..s
                }
            }
        }
    }
}

/// Position automaton of `ast`: state 0 is initial, state `p >= 1` is the
/// `p`-th letter occurrence. No ε-transitions are produced.
pub fn regex_to_nfa(ast: &RegexAst, letters: &[String]) -> Nfa {
    let mut g = Glushkov {
        symbol: Vec::new(),
        follow: Vec::new(),
    };
    let top = g.walk(ast);
    let mut nfa = Nfa::new(letters.to_vec(), g.symbol.len() + 1);
    nfa.set_initial(0);
    if top.nullable {
        nfa.set_accepting(0);
    }
    for &p in &top.last {
        nfa.set_accepting(p);
    }
    for &p in &top.first {
        nfa.add_transition(0, g.symbol[p - 1], p);
    }
    for (i, follows) in g.follow.iter().enumerate() {
        for &q in follows {
            nfa.add_transition(i + 1, g.symbol[q - 1], q);
        }
    }
    nfa
}

/// Parses, compiles, determinizes and minimizes in one step.
pub fn regex_to_min_dfa(text: &str, letters: &[String]) -> Result<Dfa> {
    let ast = parse_regex(text, letters)?;
    Ok(minimize(&determinize(&regex_to_nfa(&ast, letters)).dfa))
}
