//! Lexer and recursive-descent parser for recipe files.

use super::ast::*;
use super::RecipeError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Eq,
    Hash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Str(_) => "string".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Dot => "`.`".to_string(),
            Tok::Eq => "`=`".to_string(),
            Tok::Hash => "`#`".to_string(),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> RecipeError {
    RecipeError::Syntax { line, col, msg: msg.into() }
}

fn lex(source: &str) -> Result<Vec<Token>, RecipeError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = source.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(ident), line: tline, col: tcol });
            continue;
        }
        if c.is_ascii_digit() || c == '-' {
            let mut digits = String::new();
            if c == '-' {
                digits.push(bump(&mut chars));
                if !chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(syntax(tline, tcol, "expected digits after `-`"));
                }
            }
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                digits.push(bump(&mut chars));
            }
            let value: i64 = digits
                .parse()
                .map_err(|_| syntax(tline, tcol, format!("integer `{digits}` out of range")))?;
            out.push(Token { tok: Tok::Int(value), line: tline, col: tcol });
            continue;
        }
        if c == '"' {
            bump(&mut chars);
            let mut text = String::new();
            loop {
                match chars.peek() {
                    None => return Err(syntax(tline, tcol, "unterminated string")),
                    Some('\n') => return Err(syntax(tline, tcol, "unterminated string")),
                    Some('"') => {
                        bump(&mut chars);
                        break;
                    }
                    Some(_) => text.push(bump(&mut chars)),
                }
            }
            out.push(Token { tok: Tok::Str(text), line: tline, col: tcol });
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '=' => Tok::Eq,
            '#' => Tok::Hash,
            other => {
                return Err(syntax(tline, tcol, format!("unexpected character `{other}`")));
            }
        };
        bump(&mut chars);
        out.push(Token { tok, line: tline, col: tcol });
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

/// Parses recipe source text.
pub fn parse(source: &str) -> Result<Recipe, RecipeError> {
    let tokens = lex(source)?;
    let mut p = Parser { tokens, pos: 0 };
    p.recipe()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, expected: &str) -> RecipeError {
        let t = self.peek();
        syntax(t.line, t.col, format!("expected {expected}, found {}", t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Token, RecipeError> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            Err(self.err_here(expected))
        }
    }

    fn ident(&mut self, expected: &str) -> Result<(String, usize, usize), RecipeError> {
        match self.peek().tok.clone() {
            Tok::Ident(name) => {
                let t = self.next();
                Ok((name, t.line, t.col))
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn int(&mut self, expected: &str) -> Result<i64, RecipeError> {
        match self.peek().tok {
            Tok::Int(v) => {
                self.next();
                Ok(v)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn string(&mut self, expected: &str) -> Result<String, RecipeError> {
        match self.peek().tok.clone() {
            Tok::Str(s) => {
                self.next();
                Ok(s)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn recipe(&mut self) -> Result<Recipe, RecipeError> {
        let mut statements = Vec::new();
        while self.peek().tok != Tok::Eof {
            statements.push(self.stmt()?);
        }
        Ok(Recipe { statements })
    }

    fn stmt(&mut self) -> Result<Stmt, RecipeError> {
        let (head, line, _col) = self.ident("`let` or `assert`")?;
        let kind = match head.as_str() {
            "let" => {
                let (name, nline, ncol) = self.ident("a binding name")?;
                if matches!(name.as_str(), "let" | "assert" | "by") {
                    return Err(syntax(nline, ncol, format!("`{name}` is a reserved word")));
                }
                self.expect(Tok::Eq, "`=`")?;
                let expr = self.expr()?;
                StmtKind::Let { name, expr }
            }
            "assert" => StmtKind::Assert(self.assertion()?),
            other => {
                return Err(syntax(line, 1, format!("expected `let` or `assert`, found `{other}`")));
            }
        };
        Ok(Stmt { line, kind })
    }

    fn expr(&mut self) -> Result<Expr, RecipeError> {
        let (name, _, _) = self.ident("a block or operation name")?;
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                args.push(self.arg()?);
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen, "`)` or `,`")?;
        let mut expr = Expr::Call { name, args };
        while self.peek().tok == Tok::Dot {
            self.next();
            let (field, _, _) = self.ident("a surface name")?;
            expr = Expr::Project { base: Box::new(expr), field };
        }
        Ok(expr)
    }

    fn arg(&mut self) -> Result<Arg, RecipeError> {
        match self.peek().tok.clone() {
            Tok::Int(v) => {
                self.next();
                Ok(Arg::Int(v))
            }
            Tok::Str(s) => {
                self.next();
                Ok(Arg::Str(s))
            }
            Tok::Ident(name) => {
                self.next();
                match self.peek().tok {
                    Tok::Dot => {
                        self.next();
                        let (surface, _, _) = self.ident("a surface name")?;
                        Ok(Arg::Selector { owner: name, surface })
                    }
                    Tok::Eq => {
                        self.next();
                        let value = self.int("an integer value")?;
                        Ok(Arg::KeyVal { key: name, value })
                    }
                    _ => Ok(Arg::Name(name)),
                }
            }
            _ => Err(self.err_here("an argument")),
        }
    }

    fn assertion(&mut self) -> Result<Assertion, RecipeError> {
        let (head, hline, hcol) = self.ident("an assertion name")?;
        self.expect(Tok::LParen, "`(`")?;
        let assertion = match head.as_str() {
            "invariants" => {
                let (target, _, _) = self.ident("a manifold name")?;
                let checks = self.kv_list(
                    InvKey::from_name,
                    "one of `e`, `sigma`, `c1sq`, `chi`",
                )?;
                Assertion::Invariants { target, checks }
            }
            "homeo" => {
                let (target, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::Comma, "`,`")?;
                let p = self.int("a CP2 count")?;
                self.keyword("CP2")?;
                self.expect(Tok::Hash, "`#`")?;
                let q = self.int("an mCP2 count")?;
                self.keyword("mCP2")?;
                Assertion::Homeo { target, p, q }
            }
            "homeo_refused" => {
                let (target, _, _) = self.ident("a manifold name")?;
                Assertion::HomeoRefused { target }
            }
            "bmy" => {
                let (target, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::Comma, "`,`")?;
                let (word, wline, wcol) = self.ident("`on_line`, `below`, or `violated`")?;
                let status = BmyWord::from_name(&word).ok_or_else(|| {
                    syntax(wline, wcol, format!("unknown status `{word}`"))
                })?;
                Assertion::Bmy { target, status }
            }
            "simply_connected" => {
                let (target, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::RParen, "`)`")?;
                let tag = self.by_clause()?;
                return Ok(Assertion::SimplyConnected { target, tag });
            }
            "nonspin" => {
                let (target, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::RParen, "`)`")?;
                let tag = self.by_clause()?;
                return Ok(Assertion::NonSpin { target, tag });
            }
            "pi1" => {
                let (target, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::Comma, "`,`")?;
                let (word, wline, wcol) = self.ident("`trivial` or `z2`")?;
                let claim = Pi1Word::from_name(&word).ok_or_else(|| {
                    syntax(wline, wcol, format!("unknown fundamental group tag `{word}`"))
                })?;
                self.expect(Tok::RParen, "`)`")?;
                let tag = self.by_clause()?;
                return Ok(Assertion::Pi1Is { target, claim, tag });
            }
            "h1_trivial" => {
                let reference = self.presentation_ref()?;
                Assertion::H1Trivial { reference }
            }
            "surface" => {
                let (owner, _, _) = self.ident("a manifold name")?;
                self.expect(Tok::Dot, "`.`")?;
                let (surface, _, _) = self.ident("a surface name")?;
                let checks = self.kv_list(
                    SurfKey::from_name,
                    "one of `genus`, `square`, `nodes`",
                )?;
                Assertion::SurfaceShape { owner, surface, checks }
            }
            "minimal" => {
                let (target, _, _) = self.ident("a manifold name")?;
                Assertion::MinimalYes { target }
            }
            other => {
                return Err(syntax(hline, hcol, format!("unknown assertion `{other}`")));
            }
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(assertion)
    }

    /// Parses `, key=value`+ up to (not consuming) the closing paren.
    fn kv_list<K: Copy>(
        &mut self,
        key_of: impl Fn(&str) -> Option<K>,
        expected: &str,
    ) -> Result<Vec<(K, i64)>, RecipeError> {
        let mut checks: Vec<(K, i64)> = Vec::new();
        let mut seen: Vec<String> = Vec::new();
        while self.peek().tok == Tok::Comma {
            self.next();
            let (word, wline, wcol) = self.ident(expected)?;
            let key = key_of(&word)
                .ok_or_else(|| syntax(wline, wcol, format!("expected {expected}, found `{word}`")))?;
            if seen.contains(&word) {
                return Err(syntax(wline, wcol, format!("duplicate key `{word}`")));
            }
            seen.push(word);
            self.expect(Tok::Eq, "`=`")?;
            let value = self.int("an integer value")?;
            checks.push((key, value));
        }
        if checks.is_empty() {
            return Err(self.err_here("at least one `key=value` check"));
        }
        Ok(checks)
    }

    fn keyword(&mut self, word: &str) -> Result<(), RecipeError> {
        let expected = format!("`{word}`");
        let (got, line, col) = self.ident(&expected)?;
        if got == word {
            Ok(())
        } else {
            Err(syntax(line, col, format!("expected `{word}`, found `{got}`")))
        }
    }

    fn by_clause(&mut self) -> Result<String, RecipeError> {
        self.keyword("by")?;
        self.string("a citation string")
    }

    /// Parses `name` or `name(i, j, ...)` into canonical reference text.
    fn presentation_ref(&mut self) -> Result<String, RecipeError> {
        let (name, _, _) = self.ident("a presentation reference")?;
        if self.peek().tok != Tok::LParen {
            return Ok(name);
        }
        self.next();
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            loop {
                args.push(self.int("an integer parameter")?.to_string());
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen, "`)` or `,`")?;
        Ok(format!("{name}({})", args.join(", ")))
    }
}
