use clap::ValueEnum;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    /// One `RESULT:` line and optional `WITNESS:` lines.
    Machine,
}

pub struct Out {
    format: Format,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { format }
    }

    pub fn machine(&self) -> bool {
        self.format == Format::Machine
    }

    pub fn result(&mut self, token: &str, human: &str) {
        if self.machine() {
            println!("RESULT: {token}");
        } else {
            println!("{human}");
        }
    }

    pub fn witness(&mut self, text: &str) {
        if self.machine() {
            println!("WITNESS: {text}");
        } else {
            println!("  {text}");
        }
    }

    /// Transcript text; suppressed in machine mode.
    pub fn line(&mut self, text: &str) {
        if !self.machine() {
            println!("{text}");
        }
    }

    /// File contents go to stdout verbatim in either mode.
    pub fn raw(&mut self, text: &str) {
        print!("{text}");
    }

    pub fn note(&mut self, text: &str) {
        eprintln!("note: {text}");
    }
}
