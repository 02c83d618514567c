ERROR_MESSAGES = {
    # graphs
    "SELF_LOOP": "Self-loop on vertex {vertex} is not allowed in a simple graph.",
    "UNKNOWN_ENDPOINT": "Edge ({u}, {v}) has an endpoint outside the vertex set.",
    "DUPLICATE_VERTEX": "Vertex {vertex} is listed more than once.",
    "SELF_IDENTIFICATION": "Cannot identify vertex {vertex} with itself.",
    "UNKNOWN_VERTEX": "Vertex {vertex} is not part of the graph.",
    "NOT_A_SUBSET": "Vertex set is not contained in the graph, missing: {missing}.",
    "EDGELESS_SLB": "The smallest leaf-block is undefined for a graph without edges.",
    "INVALID_ALPHA": "Robustness threshold must be at least 1, got {alpha}.",
    # caps
    "CAP_EXCEEDED": "{what} is limited to {cap} vertices, got {size}. Raise the limit with {flag}.",
    # parsing
    "MISSING_HEADER": "Missing 'p {kind}' header line.",
    "DUPLICATE_HEADER": "Header line appears more than once.",
    "BAD_HEADER": "Malformed header: {line!r}.",
    "BAD_LINE": "Unrecognised line: {line!r}.",
    "VERTEX_OUT_OF_RANGE": "Vertex {vertex} outside 1..{n}.",
    "DUPLICATE_EDGE": "Edge {u} {v} listed more than once.",
    "EDGE_COUNT_MISMATCH": "Header announces {expected} edges, found {found}.",
    "EMPTY_FAMILY": "A family needs at least one member.",
    "GRAPH_OUTSIDE_BLOCK": "Graph data before the first 'g <name>' line.",
    "UNNAMED_MEMBER": "Family member without a name.",
    "EMPTY_CLAUSE": "Empty clauses are not accepted.",
    "DUPLICATE_LITERAL": "Literal {literal} repeated inside one clause.",
    "LITERAL_OUT_OF_RANGE": "Literal {literal} refers to a variable outside 1..{k}.",
    "UNTERMINATED_CLAUSE": "Last clause is not terminated by 0.",
    "CLAUSE_COUNT_MISMATCH": "Header announces {expected} clauses, found {found}.",
    "NO_CLAUSES": "Formula has no clauses.",
    "FILE_NOT_FOUND": "Cannot read {path}.",
    "NOT_TEXT": "{path} is not UTF-8 text.",
    # preconditions
    "NEGATIVE_BUDGET": "Budget must be non-negative, got {budget}.",
    "BUDGET_OUT_OF_RANGE": "Budget {budget} exceeds the number of vertices {n}.",
    "EMPTY_ALPHA_FAMILY": "Cannot compute the robustness constant of an empty family.",
    "NEGATIVE_MATCHING_BOUND": "Matching bound must be non-negative, got {m}.",
    "NOT_A_PARTITION": "The sets U, R, S do not partition the vertex set.",
    "PATTERN_NOT_CONNECTED": "The gadget pattern must be connected.",
    "PATTERN_TOO_SMALL": "The gadget pattern needs at least 3 vertices, got {size}.",
    "CLAUSE_SIZE": "Clause size must be at least 1, got {size}.",
    "CLAUSE_INDEX": "Clause position {index} outside 1..{n}.",
    "DISJOINT_SETS": "U and R must be disjoint subsets of the graph.",
    "UNKNOWN_CONTAINMENT": "Containment type must be 'minor' or 'subgraph', got {value!r}.",
    "UNKNOWN_ENGINE": "Engine must be one of auto, turing, brute, got {value!r}.",
    "ASSIGNMENT_NOT_SATISFYING": "The given assignment does not satisfy the formula.",
    "ANALYZE_NOTHING": "analyze needs --graph, --family or both.",
    # regimes
    "LOWER_BOUND_REGIME": (
        "Family has no P3-subgraph-free member after stripping isolated vertices: "
        "lower-bound regime, the Turing kernel does not apply."
    ),
    "REDUCTION_REGIME": (
        "Member {name} has no component on 3 or more vertices: the family admits a "
        "Turing kernel, the hardness reduction does not apply."
    ),
    # solver self checks
    "R_Q_EDGE": "Edge between R and Q found for U={u}, R={r}.",
    "WITNESS_INVALID": "Assembled deletion set {witness} does not leave a free graph.",
    "WITNESS_TOO_LARGE": "Assembled deletion set has {size} vertices, budget is {budget}.",
    "VERIFICATION_FAILED": "Verification failed: {checks}.",
    "SYSTEM_ERROR": "An unexpected error occurred. See the log for details.",
}
