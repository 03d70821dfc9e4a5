#pragma once
// Convenience umbrella for the whole library except the HTTP transport
// (include citemetrics/http_client.hpp separately when you need network
// ingest).

#include "citemetrics/author_metrics.hpp"
#include "citemetrics/csv.hpp"
#include "citemetrics/fuzzy.hpp"
#include "citemetrics/graph.hpp"
#include "citemetrics/graph_io.hpp"
#include "citemetrics/ingest.hpp"
#include "citemetrics/paper_metrics.hpp"
#include "citemetrics/rank_analysis.hpp"
#include "citemetrics/synthetic.hpp"
#include "citemetrics/types.hpp"
