use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("graph with {n} vertices exceeds the graph6 encoding cap of {max}")]
    Graph6TooLarge { n: usize, max: usize },

    #[error("{engine} engine accepts at most {cap} vertices, graph has {n}")]
    SizeCapExceeded {
        engine: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("memo table exceeded its memory budget of {budget} bytes")]
    MemoBudgetExceeded { budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
