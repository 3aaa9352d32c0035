/** Debounced request scheduling with stale-response rejection.
 *
 * Slider drags fire far faster than the service should be hit, so calls
 * are debounced (100 ms by default). Responses may also arrive out of
 * order; each scheduled run gets a monotonically increasing sequence
 * number and only the newest one may apply its result.
 */

export const DEBOUNCE_MS = 100;

export class Scheduler<T> {
  private sequence = 0;
  private applied = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly run: () => Promise<T>,
    private readonly apply: (result: T) => void,
    private readonly onError: (error: unknown) => void = () => {},
    private readonly delay: number = DEBOUNCE_MS,
  ) {}

  /** Debounced request; trailing edge wins. */
  schedule(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, this.delay);
  }

  /** Immediate request (still sequence-checked). */
  async fire(): Promise<void> {
    const ticket = ++this.sequence;
    try {
      const result = await this.run();
      if (ticket > this.applied) {
        this.applied = ticket;
        this.apply(result);
      }
    } catch (error) {
      if (ticket > this.applied) this.onError(error);
    }
  }
}
