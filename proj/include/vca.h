/* C interface to the vertex-cover algebra engine. All functions returning
 * vca_status set a thread-local error message readable via vca_last_error.
 * Strings returned through char** are heap-allocated; free them with
 * vca_string_free. */
#ifndef VCA_H
#define VCA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    VCA_OK = 0,
    VCA_ERR_PARSE = 1,
    VCA_ERR_NOT_BIPARTITE = 2,
    VCA_ERR_NO_EDGES = 3,
    VCA_ERR_INVALID_ARG = 4,
    VCA_ERR_BUDGET = 5,
    VCA_ERR_INTERNAL = 6
} vca_status;

typedef struct vca_graph vca_graph;
typedef struct vca_hypergraph vca_hypergraph;

vca_status vca_graph_from_text(const char* text, vca_graph** out);
vca_status vca_graph_generate(const char* spec, vca_graph** out);
vca_status vca_graph_to_text(const vca_graph* g, char** out);
void vca_graph_free(vca_graph* g);

/* JSON reports. kmax/m_max/workers <= 0 select the defaults (12, 4, 1). */
vca_status vca_analyze_json(const vca_graph* g, int kmax, int m_max, int workers,
                            char** out);
vca_status vca_analyze_text(const vca_graph* g, int kmax, int m_max, int workers,
                            char** out);
vca_status vca_covers_json(const vca_graph* g, int k, char** out);
vca_status vca_gdim_json(const vca_graph* g, char** out);
vca_status vca_gdim_render(const vca_graph* g, char** out);
vca_status vca_hilbert_json(const vca_graph* g, int kmax, int workers, char** out);
vca_status vca_hilbert_text(const vca_graph* g, int kmax, int workers, char** out);
vca_status vca_lattice_json(const vca_graph* g, char** out);

vca_status vca_hypergraph_from_text(const char* text, vca_hypergraph** out);
void vca_hypergraph_free(vca_hypergraph* h);
vca_status vca_hypergraph_report_json(const vca_hypergraph* h, int kmax,
                                      unsigned long long box_budget, char** out);

/* Runs the self-contained verification suite; one callback per output line.
 * Returns the number of failed criteria. */
typedef void (*vca_line_cb)(const char* line, void* user);
int vca_verify(vca_line_cb cb, void* user);

void vca_string_free(char* s);
const char* vca_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
