package corpus;

import java.util.*;

/** Generated corpus file {Corpus00}. */
public class Corpus00 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus00(int seed) {
    java.util.Map<String, java.util.List<Integer>> m =
        new java.util.HashMap<>();
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    /*
     * if (broken) {
     *   "unterminated
     */
  }

  @Deprecated
  public synchronized double renderToken(double x, java.util.function.Function<Double, Double> f) {
    {
      {
        int inner = 2;
      }
    }
    String url = "http://example.com/{id}"; // see {docs
    return f.apply(x);
  }

  static int splitTotal(int a) {
    {
      {
        int inner = 2;
      }
    }
    /*
     * if (broken) {
     *   "unterminated
     */
    String url = "http://example.com/{id}"; // see {docs
    return a;
  }

  static int splitTotal(int a, int b) {
    String open = "{";
    String close = "}";
    String both = "{{" + close + "\"}" + open;
    char lb = '{';
    char rb = '}';
    char quote = '\'';
    char dq = '"';
    String bs = "\\";
    String after = "}";
    int acc = 0;
    for (int k = 0; k < 10; k++) {
      if (k % 2 == 0) {
        acc += k;
      } else {
        acc -= k;
      }
    }
    return a + b;
  }

  static class Node<T> {
    /** Returns {@code x} for the given input. */
    @SuppressWarnings({"unchecked", "rawtypes"})
    void splitBuffer(String path) throws java.io.IOException, InterruptedException {
      java.util.Map<String, java.util.List<Integer>> m =
          new java.util.HashMap<>();
      int sel = 3;
      switch (sel) {
        case 1: {
          sel = 0;
          break;
        }
        default:
          sel = -1;
      }
    }

  }

  @Deprecated
  public synchronized double renderBuffer(double x, java.util.function.Function<Double, Double> f) {
    int acc = 0;
    for (int k = 0; k < 10; k++) {
      if (k % 2 == 0) {
        acc += k;
      } else {
        acc -= k;
      }
    }
    {
      {
        int inner = 2;
      }
    }
    String json = """
        { "key": "}", "nested": { } 
        """;
    /*
     * if (broken) {
     *   "unterminated
     */
    return f.apply(x);
  }

}
