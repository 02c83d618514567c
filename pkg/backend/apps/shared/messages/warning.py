WARNING_MESSAGES = {
    "CAP_OVERRIDE": "!!! {name} limit overridden: {old} -> {new}. Runtime may explode. !!!",
    "EMPTY_TREEWIDTH": "Treewidth of the empty graph reported as -1 by convention.",
    "EMPTY_MEMBER": "Family member {name} is empty after stripping isolated vertices; every instance is NO.",
    "TURING_FALLBACK": "No P3-subgraph-free member: engine auto falls back to brute force.",
    "VERIFY_SKIPPED": "Check {check} skipped: {reason}.",
}
