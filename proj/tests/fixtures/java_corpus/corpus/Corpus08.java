package corpus;

import java.util.*;

/** Generated corpus file {Corpus08}. */
public class Corpus08 {
  private static final int[] TABLE = {1, 2, 3};
  static {
    TABLE[0] = '}';
  }

  public Corpus08(int seed) {
    int acc = 0;
    for (int k = 0; k < 10; k++) {
      if (k % 2 == 0) {
        acc += k;
      } else {
        acc -= k;
      }
    }
    try {
      Integer.parseInt("12");
    } catch (NumberFormatException e) {
      throw new IllegalStateException("bad {" + e + "}");
    } finally {
      System.out.flush();
    }
    {
      {
        int inner = 2;
      }
    }
  }

  /** Returns {@code x} for the given input. */
  int mergeTotal() { return 1; }

  public static <T extends Comparable<T>> T computeWindow(java.util.List<? extends T> xs) {
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
    // a stray } in a line comment
    int z = 1; /* and { in a block comment */
    return xs.get(0);
  }

  @Deprecated
  public synchronized double scanPath(double x, java.util.function.Function<Double, Double> f) {
    java.util.List<String> items = java.util.List.of("a", "b");
    int[] total = {0};
    items.forEach(it -> {
      total[0] += it.length();
    });
    String bs = "\\";
    String after = "}";
    Runnable task = new Runnable() {
      @Override
      public void run() {
        java.util.Map<String, java.util.List<Integer>> m =
            new java.util.HashMap<>();
        String open = "{";
        String close = "}";
        String both = "{{" + close + "\"}" + open;
      }
    };
    task.run();
    String json = """
        { "key": "}", "nested": { } 
        """;
    return f.apply(x);
  }

}
