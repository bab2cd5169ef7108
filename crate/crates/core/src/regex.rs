//! Regex syntax, symbol interning and Thompson's construction.
//!
//! Concrete syntax: literal characters, `|` for union, postfix `*`,
//! parentheses for grouping, `\e` for ε and `\0` for ∅. The characters
//! `\ | * ( )` are escaped with a backslash. Juxtaposition is
//! concatenation and binds tighter than `|`; `*` binds tightest.

use std::collections::HashMap;
use std::fmt;

use crate::automaton::{ENfa, State, Symbol, Transition, EPSILON};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptySet,
    Epsilon,
    Literal(Symbol),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Alt(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn concat(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Concat(Box::new(left), Box::new(right))
    }

    pub fn alt(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Alt(Box::new(left), Box::new(right))
    }

    pub fn star(inner: RegexAst) -> Self {
        RegexAst::Star(Box::new(inner))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            RegexAst::EmptySet | RegexAst::Epsilon | RegexAst::Literal(_) => 1,
            RegexAst::Concat(l, r) | RegexAst::Alt(l, r) => 1 + l.size() + r.size(),
            RegexAst::Star(inner) => 1 + inner.size(),
        }
    }

    pub fn contains_empty_set(&self) -> bool {
        match self {
            RegexAst::EmptySet => true,
            RegexAst::Epsilon | RegexAst::Literal(_) => false,
            RegexAst::Concat(l, r) | RegexAst::Alt(l, r) => {
                l.contains_empty_set() || r.contains_empty_set()
            }
            RegexAst::Star(inner) => inner.contains_empty_set(),
        }
    }

    /// Largest literal symbol, 0 if none.
    pub fn max_symbol(&self) -> Symbol {
        match self {
            RegexAst::EmptySet | RegexAst::Epsilon => 0,
            RegexAst::Literal(a) => *a,
            RegexAst::Concat(l, r) | RegexAst::Alt(l, r) => l.max_symbol().max(r.max_symbol()),
            RegexAst::Star(inner) => inner.max_symbol(),
        }
    }
}

/// Renders in the concrete syntax with literal symbols shown as integers in
/// angle brackets; used for diagnostics only.
impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegexAst::EmptySet => write!(f, "\\0"),
            RegexAst::Epsilon => write!(f, "\\e"),
            RegexAst::Literal(a) => write!(f, "<{a}>"),
            RegexAst::Concat(l, r) => write!(f, "({l}{r})"),
            RegexAst::Alt(l, r) => write!(f, "({l}|{r})"),
            RegexAst::Star(inner) => write!(f, "({inner})*"),
        }
    }
}

/// Maps characters to dense symbols `1..=sigma` in first-occurrence order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    chars: Vec<char>,
    ids: HashMap<char, Symbol>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of interned characters.
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn intern(&mut self, c: char) -> Symbol {
        if let Some(&id) = self.ids.get(&c) {
            return id;
        }
        self.chars.push(c);
        let id = self.chars.len() as Symbol;
        self.ids.insert(c, id);
        id
    }

    pub fn symbol(&self, c: char) -> Option<Symbol> {
        self.ids.get(&c).copied()
    }

    pub fn char_of(&self, symbol: Symbol) -> Option<char> {
        symbol
            .checked_sub(1)
            .and_then(|i| self.chars.get(i as usize))
            .copied()
    }

    /// Encode text, interning characters that are not yet known. New
    /// characters receive symbols beyond the automaton's alphabet.
    pub fn encode(&mut self, text: &str) -> Vec<Symbol> {
        text.chars().map(|c| self.intern(c)).collect()
    }

    /// Unknown symbols render as U+FFFD.
    pub fn decode(&self, symbols: &[Symbol]) -> String {
        symbols
            .iter()
            .map(|&s| self.char_of(s).unwrap_or('\u{FFFD}'))
            .collect()
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    input: &'a str,
    table: SymbolTable,
}

impl Parser<'_> {
    fn error<T>(&self, position: usize, message: &str) -> Result<T> {
        Err(Error::RegexSyntax {
            position,
            message: message.to_string(),
        })
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.input.len(), |&(o, _)| o)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn parse_alt(&mut self) -> Result<RegexAst> {
        let mut left = self.parse_concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            let right = self.parse_concat()?;
            left = RegexAst::alt(left, right);
        }
        Ok(left)
    }

    fn parse_concat(&mut self) -> Result<RegexAst> {
        let mut acc: Option<RegexAst> = None;
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let item = self.parse_repeat()?;
            acc = Some(match acc {
                None => item,
                Some(prev) => RegexAst::concat(prev, item),
            });
        }
        match acc {
            Some(ast) => Ok(ast),
            None => self.error(self.offset(), "empty alternative"),
        }
    }

    fn parse_repeat(&mut self) -> Result<RegexAst> {
        let mut atom = self.parse_atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            atom = RegexAst::star(atom);
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<RegexAst> {
        let start = self.offset();
        let c = self.peek().expect("caller checked for end of input");
        self.pos += 1;
        match c {
            '*' => self.error(start, "dangling `*`"),
            '(' => {
                let inner = self.parse_alt()?;
                if self.peek() != Some(')') {
                    return self.error(start, "unclosed `(`");
                }
                self.pos += 1;
                Ok(inner)
            }
            '\\' => {
                let Some(next) = self.peek() else {
                    return self.error(start, "trailing backslash");
                };
                self.pos += 1;
                match next {
                    'e' => Ok(RegexAst::Epsilon),
                    '0' => Ok(RegexAst::EmptySet),
                    '\\' | '|' | '*' | '(' | ')' => Ok(RegexAst::Literal(self.table.intern(next))),
                    _ => self.error(start, "unknown escape"),
                }
            }
            _ => Ok(RegexAst::Literal(self.table.intern(c))),
        }
    }
}

/// Parse a regex, interning its characters as symbols `1..=sigma`.
pub fn parse_regex(text: &str) -> Result<(RegexAst, SymbolTable)> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        input: text,
        table: SymbolTable::new(),
    };
    let ast = parser.parse_alt()?;
    if parser.pos < parser.chars.len() {
        // parse_alt only stops early on an unmatched `)`
        return parser.error(parser.offset(), "unmatched `)`");
    }
    Ok((ast, parser.table))
}

struct Builder {
    num_states: u32,
    transitions: Vec<Transition>,
}

impl Builder {
    fn state(&mut self) -> State {
        self.num_states += 1;
        self.num_states - 1
    }

    fn edge(&mut self, src: State, label: Symbol, dst: State) {
        self.transitions.push(Transition::new(src, label, dst));
    }

    /// Returns the (initial, final) pair of the fragment.
    fn build(&mut self, ast: &RegexAst) -> (State, State) {
        match ast {
            RegexAst::EmptySet => (self.state(), self.state()),
            RegexAst::Epsilon => {
                let (s, f) = (self.state(), self.state());
                self.edge(s, EPSILON, f);
                (s, f)
            }
            RegexAst::Literal(a) => {
                let (s, f) = (self.state(), self.state());
                self.edge(s, *a, f);
                (s, f)
            }
            RegexAst::Concat(l, r) => {
                let (ls, lf) = self.build(l);
                let (rs, rf) = self.build(r);
                self.edge(lf, EPSILON, rs);
                (ls, rf)
            }
            RegexAst::Alt(l, r) => {
                let (s, f) = (self.state(), self.state());
                let (ls, lf) = self.build(l);
                let (rs, rf) = self.build(r);
                self.edge(s, EPSILON, ls);
                self.edge(s, EPSILON, rs);
                self.edge(lf, EPSILON, f);
                self.edge(rf, EPSILON, f);
                (s, f)
            }
            RegexAst::Star(inner) => {
                let (s, f) = (self.state(), self.state());
                let (is, inf) = self.build(inner);
                self.edge(s, EPSILON, is);
                self.edge(inf, EPSILON, is);
                self.edge(inf, EPSILON, f);
                self.edge(s, EPSILON, f);
                (s, f)
            }
        }
    }
}

/// Thompson's construction. The result has at most `2|ast|` states and
/// `4|ast|` transitions, and is trim unless the AST contains `EmptySet`.
pub fn compile_thompson(ast: &RegexAst, sigma: u32) -> ENfa {
    let mut builder = Builder {
        num_states: 0,
        transitions: Vec::new(),
    };
    let (initial, final_state) = builder.build(ast);
    ENfa::new(
        builder.num_states as usize,
        sigma.max(ast.max_symbol()),
        initial,
        final_state,
        builder.transitions,
    )
}

/// Parse, compile and trim.
pub fn compile(pattern: &str) -> Result<(ENfa, SymbolTable)> {
    let (ast, table) = parse_regex(pattern)?;
    let nfa = compile_thompson(&ast, table.len() as u32).trim();
    Ok((nfa, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use RegexAst::*;

    fn lit(a: Symbol) -> RegexAst {
        Literal(a)
    }

    #[test]
    fn single_literal() {
        let (ast, table) = parse_regex("a").unwrap();
        assert_eq!(ast, lit(1));
        assert_eq!(table.char_of(1), Some('a'));
    }

    #[test]
    fn precedence_star_concat_alt() {
        let (ast, _) = parse_regex("(a|b)*c").unwrap();
        assert_eq!(
            ast,
            RegexAst::concat(RegexAst::star(RegexAst::alt(lit(1), lit(2))), lit(3))
        );
        let (ast, _) = parse_regex("ab|c*").unwrap();
        assert_eq!(
            ast,
            RegexAst::alt(RegexAst::concat(lit(1), lit(2)), RegexAst::star(lit(3)))
        );
    }

    #[test]
    fn escapes() {
        let (ast, table) = parse_regex(r"\e|\0|\*\(").unwrap();
        assert_eq!(
            ast,
            RegexAst::alt(
                RegexAst::alt(Epsilon, EmptySet),
                RegexAst::concat(lit(1), lit(2))
            )
        );
        assert_eq!(table.char_of(1), Some('*'));
        assert_eq!(table.char_of(2), Some('('));
    }

    #[test]
    fn interning_is_first_occurrence_order() {
        let (_, table) = parse_regex("cab(c|a)").unwrap();
        assert_eq!(table.symbol('c'), Some(1));
        assert_eq!(table.symbol('a'), Some(2));
        assert_eq!(table.symbol('b'), Some(3));
        assert_eq!(table.len(), 3);
    }

    #[test]
    fn syntax_errors() {
        let cases = [
            ("a||b", 2),
            ("a|", 2),
            ("|a", 0),
            ("", 0),
            ("()", 1),
            ("*a", 0),
            ("a(*)", 2),
            ("(ab", 0),
            ("ab)", 2),
            (r"a\q", 1),
            ("a\\", 1),
        ];
        for (text, expected) in cases {
            match parse_regex(text) {
                Err(Error::RegexSyntax { position, .. }) => {
                    assert_eq!(position, expected, "position for {text:?}")
                }
                other => panic!("{text:?} should fail, got {other:?}"),
            }
        }
    }

    #[test]
    fn double_star_is_allowed() {
        let (ast, _) = parse_regex("a**").unwrap();
        assert_eq!(ast, RegexAst::star(RegexAst::star(lit(1))));
    }

    #[test]
    fn literal_compiles_to_single_transition() {
        let nfa = compile_thompson(&lit(1), 1);
        assert_eq!(nfa.num_states(), 2);
        assert_eq!(
            nfa.transitions(),
            &[Transition::new(nfa.initial(), 1, nfa.final_state())]
        );
    }

    #[test]
    fn empty_set_trims_to_empty() {
        let (nfa, _) = compile(r"\0").unwrap();
        assert!(nfa.is_trivially_empty());
        let (nfa, _) = compile(r"a\0|b").unwrap();
        assert!(!nfa.is_trivially_empty());
    }

    #[test]
    fn thompson_output_is_trim() {
        let (ast, table) = parse_regex("(a|b)*c(\\e|d)").unwrap();
        let nfa = compile_thompson(&ast, table.len() as u32);
        assert_eq!(nfa.trim(), nfa);
    }

    #[test]
    fn decode_round_trip() {
        let (_, mut table) = parse_regex("ab").unwrap();
        let encoded = table.encode("abz");
        assert_eq!(encoded, vec![1, 2, 3]);
        assert_eq!(table.decode(&encoded), "abz");
    }
}
