/* C word-rewriting kernel: the hot loop of the braid word-problem oracle.
 *
 * apply_letters(n, letters, images) rewrites each image word (a sequence of
 * nonzero signed free-group generator indices, stored reduced) through the
 * substitution rule of each braid letter in order, first letter first, with
 * free reduction maintained incrementally. Semantics mirror
 * chaingroup._kernel_py exactly; the test suite cross-checks both.
 */

#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <stdlib.h>
#include <string.h>

typedef struct {
    long *data;
    Py_ssize_t len;
    Py_ssize_t cap;
} wordbuf;

static int
wordbuf_init(wordbuf *w, Py_ssize_t cap)
{
    if (cap < 8)
        cap = 8;
    w->data = PyMem_Malloc((size_t)cap * sizeof(long));
    if (w->data == NULL)
        return -1;
    w->len = 0;
    w->cap = cap;
    return 0;
}

static void
wordbuf_free(wordbuf *w)
{
    PyMem_Free(w->data);
    w->data = NULL;
    w->len = w->cap = 0;
}

static int
wordbuf_reserve(wordbuf *w, Py_ssize_t need)
{
    Py_ssize_t cap = w->cap;
    long *grown;
    if (need <= cap)
        return 0;
    while (cap < need)
        cap *= 2;
    grown = PyMem_Realloc(w->data, (size_t)cap * sizeof(long));
    if (grown == NULL)
        return -1;
    w->data = grown;
    w->cap = cap;
    return 0;
}

/* Push with cancellation against the current top. */
#define PUSH_REDUCED(buf, tok)                                   \
    do {                                                         \
        if ((buf)->len > 0 && (buf)->data[(buf)->len - 1] == -(tok)) \
            (buf)->len--;                                        \
        else                                                     \
            (buf)->data[(buf)->len++] = (tok);                   \
    } while (0)

/* Rewrite src through the single braid letter s (generator index i = |s|),
 * appending to dst (reset first). dst needs capacity 3*len(src). */
static int
rewrite_one(wordbuf *dst, const wordbuf *src, long s)
{
    long i = s > 0 ? s : -s;
    long j = i + 1;
    Py_ssize_t k;

    dst->len = 0;
    if (wordbuf_reserve(dst, 3 * src->len + 4) < 0)
        return -1;

    for (k = 0; k < src->len; k++) {
        long t = src->data[k];
        long a = t > 0 ? t : -t;
        if (a != i && a != j) {
            PUSH_REDUCED(dst, t);
        }
        else if (s > 0) {
            if (t == i) {
                PUSH_REDUCED(dst, i);
                PUSH_REDUCED(dst, j);
                PUSH_REDUCED(dst, -i);
            }
            else if (t == -i) {
                PUSH_REDUCED(dst, i);
                PUSH_REDUCED(dst, -j);
                PUSH_REDUCED(dst, -i);
            }
            else if (t == j) {
                PUSH_REDUCED(dst, i);
            }
            else { /* t == -j */
                PUSH_REDUCED(dst, -i);
            }
        }
        else {
            if (t == i) {
                PUSH_REDUCED(dst, j);
            }
            else if (t == -i) {
                PUSH_REDUCED(dst, -j);
            }
            else if (t == j) {
                PUSH_REDUCED(dst, -j);
                PUSH_REDUCED(dst, i);
                PUSH_REDUCED(dst, j);
            }
            else { /* t == -j */
                PUSH_REDUCED(dst, -j);
                PUSH_REDUCED(dst, -i);
                PUSH_REDUCED(dst, j);
            }
        }
    }
    return 0;
}

static int
load_word(PyObject *seq, wordbuf *w)
{
    PyObject *fast = PySequence_Fast(seq, "image words must be sequences");
    Py_ssize_t len, k;
    if (fast == NULL)
        return -1;
    len = PySequence_Fast_GET_SIZE(fast);
    if (wordbuf_init(w, len + 8) < 0) {
        Py_DECREF(fast);
        PyErr_NoMemory();
        return -1;
    }
    for (k = 0; k < len; k++) {
        long v = PyLong_AsLong(PySequence_Fast_GET_ITEM(fast, k));
        if (v == -1 && PyErr_Occurred()) {
            Py_DECREF(fast);
            return -1;
        }
        w->data[w->len++] = v;
    }
    Py_DECREF(fast);
    return 0;
}

static PyObject *
apply_letters(PyObject *self, PyObject *args)
{
    long n;
    PyObject *letters_obj, *images_obj;
    PyObject *letters_fast = NULL, *images_fast = NULL, *result = NULL;
    wordbuf *words = NULL;
    wordbuf scratch = {NULL, 0, 0};
    Py_ssize_t num_words, num_letters, k, w;
    int failed = 0;

    if (!PyArg_ParseTuple(args, "lOO", &n, &letters_obj, &images_obj))
        return NULL;

    letters_fast = PySequence_Fast(letters_obj, "letters must be a sequence");
    if (letters_fast == NULL)
        goto done;
    images_fast = PySequence_Fast(images_obj, "images must be a sequence");
    if (images_fast == NULL)
        goto done;

    num_letters = PySequence_Fast_GET_SIZE(letters_fast);
    num_words = PySequence_Fast_GET_SIZE(images_fast);

    words = PyMem_Calloc((size_t)(num_words ? num_words : 1), sizeof(wordbuf));
    if (words == NULL) {
        PyErr_NoMemory();
        goto done;
    }
    for (w = 0; w < num_words; w++) {
        if (load_word(PySequence_Fast_GET_ITEM(images_fast, w), &words[w]) < 0) {
            failed = 1;
            goto done;
        }
    }
    if (wordbuf_init(&scratch, 64) < 0) {
        PyErr_NoMemory();
        failed = 1;
        goto done;
    }

    for (k = 0; k < num_letters; k++) {
        long s = PyLong_AsLong(PySequence_Fast_GET_ITEM(letters_fast, k));
        long i;
        if (s == -1 && PyErr_Occurred()) {
            failed = 1;
            goto done;
        }
        i = s > 0 ? s : -s;
        if (i < 1 || i > n - 1) {
            PyErr_Format(PyExc_ValueError, "letter %ld out of range for rank %ld", s, n);
            failed = 1;
            goto done;
        }
        for (w = 0; w < num_words; w++) {
            wordbuf tmp;
            if (rewrite_one(&scratch, &words[w], s) < 0) {
                PyErr_NoMemory();
                failed = 1;
                goto done;
            }
            /* swap scratch into place; old buffer becomes next scratch */
            tmp = words[w];
            words[w] = scratch;
            scratch = tmp;
        }
    }

    result = PyTuple_New(num_words);
    if (result == NULL) {
        failed = 1;
        goto done;
    }
    for (w = 0; w < num_words; w++) {
        PyObject *t = PyTuple_New(words[w].len);
        Py_ssize_t m;
        if (t == NULL) {
            failed = 1;
            goto done;
        }
        for (m = 0; m < words[w].len; m++) {
            PyObject *v = PyLong_FromLong(words[w].data[m]);
            if (v == NULL) {
                Py_DECREF(t);
                failed = 1;
                goto done;
            }
            PyTuple_SET_ITEM(t, m, v);
        }
        PyTuple_SET_ITEM(result, w, t);
    }

done:
    if (words != NULL) {
        for (w = 0; w < num_words; w++)
            wordbuf_free(&words[w]);
        PyMem_Free(words);
    }
    wordbuf_free(&scratch);
    Py_XDECREF(letters_fast);
    Py_XDECREF(images_fast);
    if (failed) {
        Py_XDECREF(result);
        return NULL;
    }
    return result;
}

static PyMethodDef methods[] = {
    {"apply_letters", apply_letters, METH_VARARGS,
     "apply_letters(n, letters, images) -> tuple of reduced image words"},
    {NULL, NULL, 0, NULL},
};

static struct PyModuleDef moduledef = {
    PyModuleDef_HEAD_INIT, "_speedups", NULL, -1, methods,
};

PyMODINIT_FUNC
PyInit__speedups(void)
{
    PyObject *mod = PyModule_Create(&moduledef);
    if (mod == NULL)
        return NULL;
    if (PyModule_AddStringConstant(mod, "BACKEND", "c") < 0) {
        Py_DECREF(mod);
        return NULL;
    }
    return mod;
}
